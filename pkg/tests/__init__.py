"""
Tests for pylyndon package.
"""
from pylyndon.common import set_logger

set_logger()
