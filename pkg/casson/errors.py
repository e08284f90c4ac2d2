# pylint: disable=C,R
'''
Exceptions raised by casson
'''


class CassonError(ValueError):
    pass


class DiagramError(CassonError):
    '''
    Malformed diagram; `arc` is the offending label when there is one
    '''
    def __init__(self, message, arc=None):
        super().__init__(message)
        self.arc = arc


class FramingError(CassonError):
    pass


class StageError(CassonError):
    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage


class TreeError(CassonError):
    pass
