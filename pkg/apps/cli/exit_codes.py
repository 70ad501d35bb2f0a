"""Process exit codes shared by all subcommands."""
from enum import IntEnum


class ExitCode(IntEnum):
    OK = 0
    USAGE = 2  # bad flags, malformed input, violated precondition
    NEGATIVE = 3  # unit ideal, no formula, failed verification
    UNDECIDED = 4  # a step, node or enumeration cap was hit
    INCONSISTENT = 5  # data contradicts itself
