import sys
import traceback
from typing import Optional


class bcolors:
    HEADER = '\033[95m'
    OKBLUE = '\033[94m'
    OKCYAN = '\033[96m'
    OKGREEN = '\033[92m'
    WARNING = '\033[93m'
    FAIL = '\033[91m'
    ENDC = '\033[0m'
    BOLD = '\033[1m'
    UNDERLINE = '\033[4m'


class ErrorLogger:
    """
    Colored error reporting for the command line.

    Messages go to stderr. When a log path is configured the traceback of the
    current exception is appended to that file as well.
    """
    log_path: Optional[str] = None


    @classmethod
    def configure(cls, log_path: Optional[str] = None):
        cls.log_path = log_path


    @classmethod
    def log_error(cls, error: Exception):
        colors = bcolors()
        print(f"{colors.FAIL}[ERROR]{colors.ENDC} - {error}", file=sys.stderr)

        if cls.log_path is not None:
            with open(cls.log_path, "a") as f:
                f.write(f"{error}\n")
                traceback.print_exc(file=f)
                f.write("\n\n")


class TraceLogger:
    """Gated console output for --trace and --quiet."""
    can_trace: bool = False
    quiet: bool = False


    @classmethod
    def configure(cls, trace: bool = False, quiet: bool = False):
        cls.can_trace = trace
        cls.quiet = quiet


    @classmethod
    def trace(cls, *args):
        if cls.can_trace:
            print(f"{bcolors.OKCYAN}[TRACE]{bcolors.ENDC}", *args)


    @classmethod
    def info(cls, *args):
        if not cls.quiet:
            print(f"{bcolors.OKBLUE}[INFO]{bcolors.ENDC}", *args, file=sys.stderr)