"""Exception hierarchy; everything raised by this package derives from LucasCryptError."""


class LucasCryptError(Exception):
    pass


class NotPrimeError(LucasCryptError):
    pass


class NotInvertibleError(LucasCryptError):
    pass


class KeyNotInvertibleError(NotInvertibleError):
    """Session key matrix has determinant 0 mod p."""


class NotPrimitiveRootError(LucasCryptError):
    pass


class ExponentOutOfRangeError(LucasCryptError):
    """Secret exponent outside the open interval (1, p-1)."""


class DegenerateLambdaError(LucasCryptError):
    """Agreed matrix order came out below 2; pick a fresh exponent."""


class LambdaTooLargeError(LucasCryptError):
    """Agreed matrix order exceeds the configured cap."""


class DimensionMismatchError(LucasCryptError):
    pass


class ModulusMismatchError(LucasCryptError):
    pass


class BlockMisalignedError(LucasCryptError):
    """Symbol stream length is not a multiple of the block size."""


class UnsupportedCharacterError(LucasCryptError):
    def __init__(self, char: str, position: int):
        super().__init__(f"unsupported character {char!r} at position {position}")
        self.char = char
        self.position = position


class SymbolOutOfRangeError(LucasCryptError):
    pass


class SearchSpaceTooLargeError(LucasCryptError):
    pass


class FileFormatError(LucasCryptError):
    """Key or envelope file does not match the documented text layout."""
