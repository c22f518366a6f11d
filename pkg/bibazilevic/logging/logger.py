"""Text output logging

Report data (tables, CSV, JSON) is written to stdout by the command line interface,
so all log messages go to `sys.stderr`.
"""

from datetime import datetime
import enum
import sys

import bibazilevic.config


class Format(enum.Enum):
    """Formats for displaying log messages"""
    STANDARD = 'standard'
    VERBATIM = 'verbatim'
    ITALICS = 'italics'


ERROR_COLOR = 'error_color'
RESET_ALL = 'reset_all'

# https://godoc.org/github.com/whitedevops/colors
_colorful = {Format.STANDARD: '\033[01m',  # bold
             Format.ITALICS: '\033[02m',  # dim
             Format.VERBATIM: '',
             ERROR_COLOR: '\033[91m',  # light red
             RESET_ALL: '\033[0m',
             }
_plain = {key: '' for key in _colorful.keys()}


def log(message: str, format: Format = Format.STANDARD, is_error: bool = False) -> None:
    """
    Logs text messages to `sys.stderr`.

    Args:
        message: The message to display
        format: How to format the message
        is_error: Whether the message is considered an error message
    """
    message = message.rstrip()
    if not message:
        return
    theme = _plain if bibazilevic.config.disable_colors() else _colorful
    sys.stderr.write(theme[format] + (theme[ERROR_COLOR] if is_error else '') + message + theme[RESET_ALL] + '\n')


def format_time_difference(t1: datetime, t2: datetime):
    """
    Displays the time difference from t1 to t2 in a human - readable form.
    Inspired by https://stackoverflow.com/a/11157649/243519
    """
    import dateutil.relativedelta

    difference = dateutil.relativedelta.relativedelta(t2, t1)
    return ', '.join([str(getattr(difference, attr)) + ' ' + attr for attr in
                      ['years', 'months', 'days', 'hours', 'minutes', 'seconds']
                      if getattr(difference, attr) or attr == 'seconds'])
