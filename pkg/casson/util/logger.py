import os
import sys


# mirrors every message to the diagnostic stream and, optionally, a log file
class Logger:
    def __init__(self, path=None, stream=None):
        self.path = path
        self.stream = stream if stream is not None else sys.stderr
        if path is not None:
            dirname = os.path.dirname(os.path.abspath(path))
            os.makedirs(dirname, exist_ok=True)

    def write(self, string, print_bool=True):
        ''' append string to the log file and optionally print it '''
        if print_bool:
            print(string, file=self.stream)
        if self.path is not None:
            with open(self.path, 'a') as f:
                f.write(string + '\n')
