"""
Console helpers - colored, emoji-prefixed progress lines.
Everything goes to stderr so stdout stays free for reports.
"""
import sys

from colorama import Fore, Style, init as colorama_init

colorama_init()

BANNER_WIDTH = 60


def _emit(text: str):
    print(text, file=sys.stderr)


def banner(title: str):
    """Print a framed section title."""
    _emit("=" * BANNER_WIDTH)
    _emit(f"{Style.BRIGHT}{title}{Style.RESET_ALL}")
    _emit("=" * BANNER_WIDTH)


def step(message: str):
    _emit(f"\n{Fore.CYAN}{message}{Style.RESET_ALL}")


def ok(message: str):
    _emit(f"   {Fore.GREEN}✓{Style.RESET_ALL} {message}")


def warn(message: str):
    _emit(f"{Fore.YELLOW}⚠️  {message}{Style.RESET_ALL}")


def error(message: str):
    _emit(f"{Fore.RED}❌ {message}{Style.RESET_ALL}")
