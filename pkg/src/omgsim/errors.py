"""Exception types shared across omgsim."""


class OmgError(Exception):
    """Base class for all omgsim errors."""


class UnknownSpecies(OmgError):
    """Species label matched no builtin or user-supplied record."""


class UnknownPair(OmgError):
    """Hyperfine pair absent from a record's metastable qubit list."""


class NegativeDuration(OmgError):
    """A duration argument was negative."""


class SpeciesFileError(OmgError):
    """Species override file failed to parse or validate."""


class InvalidMode(OmgError):
    """Mode triple is not one of the supported assignments."""


class IndexOutOfRange(OmgError):
    """Ion index outside the crystal."""


class InvalidCrystal(OmgError):
    """Crystal construction arguments are unusable (e.g. zero ions)."""


class CrystalTooLarge(OmgError):
    """Register exceeds the exact-simulation bound of 12 qubits."""


class MissingDuration(OmgError):
    """Machine config has no duration entry for a primitive kind."""


class CircuitError(OmgError):
    """Logical circuit violates its structural invariants."""


class UnsupportedInstruction(OmgError):
    """Instruction cannot be lowered in the selected mode."""


class InvalidShots(OmgError):
    """Shot count must be at least 1."""


class CapacityExceeded(OmgError):
    """Exact simulation would exceed the desk-scale resource bound."""


class ConfigError(OmgError):
    """Machine config file failed to parse or validate."""
