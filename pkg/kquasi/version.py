from itertools import takewhile

# kquasi version
__version__ = '0.3.0'

# numpy minimum and maximum compatible versions
__np_version_min__ = '1.22.0'
__np_version_max__ = '2.2.99'


class Version:
    def __init__(self, string) -> None:
        data = string.split('.')
        if len(data) < 3:
            raise RuntimeError(
                f'Version string {string} expected to have three numbers')
        # Keep the leading digits only ("0rc1", "0.dev0")
        self.version = tuple(int(''.join(takewhile(str.isdigit, part)) or 0)
                             for part in data[:3])

    def __eq__(self, other):
        return self.version == other.version

    def __lt__(self, other):
        return self.version < other.version

    def __gt__(self, other):
        return self.version > other.version

    def __str__(self) -> str:
        return '.'.join(str(v) for v in self.version)

    def __repr__(self) -> str:
        return self.__str__()


def check_compatibility():
    import numpy as np

    kquasi_version = Version(__version__)
    numpy_version = Version(np.__version__)
    numpy_supported_min = Version(__np_version_min__)
    numpy_supported_max = Version(__np_version_max__)

    if numpy_version < numpy_supported_min:
        raise RuntimeError(
            f'kquasi v{kquasi_version} only supports numpy v{numpy_supported_min} to v{numpy_supported_max}. '
            f'You are using numpy ({numpy_version}). Please upgrade numpy (You can use the command `pip install -U numpy`).')
    elif numpy_version > numpy_supported_max:
        from .log import Log, LogLevel
        Log(LogLevel.Warn,
            f'kquasi v{kquasi_version} has been tested with numpy up to v{numpy_supported_max}, '
            f'you are using numpy ({numpy_version}).')
    return True
