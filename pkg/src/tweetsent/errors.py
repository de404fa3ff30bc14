"""Exception hierarchy.

Every error carries a machine-readable ``code`` and the CLI ``exit_code`` it
maps to (2 config, 3 data, 4 I/O).
"""


class TweetSentError(Exception):
    code = "E_INTERNAL"
    exit_code = 1


class ConfigError(TweetSentError, ValueError):
    code = "E_CONFIG"
    exit_code = 2


class DataError(TweetSentError, ValueError):
    code = "E_DATA"
    exit_code = 3


class IoError(TweetSentError, OSError):
    code = "E_IO"
    exit_code = 4


class MissingColumn(DataError):
    code = "E_MISSING_COLUMN"

    def __init__(self, column):
        super().__init__(f"column {column!r} not found in CSV header")
        self.column = column


class MalformedCsv(DataError):
    code = "E_MALFORMED_CSV"

    def __init__(self, row_index, reason=""):
        msg = f"malformed CSV at data row {row_index}"
        super().__init__(f"{msg}: {reason}" if reason else msg)
        self.row_index = row_index


class MalformedLine(DataError):
    code = "E_MALFORMED_LINE"

    def __init__(self, line_no, reason=""):
        msg = f"malformed line {line_no}"
        super().__init__(f"{msg}: {reason}" if reason else msg)
        self.line_no = line_no


class RangeError(DataError):
    code = "E_RANGE"

    def __init__(self, word, reason=""):
        super().__init__(f"lexicon entry {word!r} out of range {reason}".rstrip())
        self.word = word


class EmptyVocabulary(DataError):
    code = "E_EMPTY_VOCABULARY"


class DegenerateSplit(DataError):
    code = "E_DEGENERATE_SPLIT"


class MissingClass(DataError):
    code = "E_MISSING_CLASS"


class EmptyMatrix(DataError):
    code = "E_EMPTY_MATRIX"


class ModelFormatError(DataError):
    code = "E_MODEL_FORMAT"


class MissingStageInput(IoError):
    code = "E_MISSING_STAGE_INPUT"
