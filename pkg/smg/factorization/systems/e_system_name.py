from enum import Enum

from ..base import UnsupportedSystemError


class ECoordinateType(Enum):
    """The coordinate systems in which the Schrödinger equation is separated."""

    CARTESIAN = "Cartesian"
    PLANE_POLAR = "PlanePolar"
    SPHERICAL = "Spherical"

    # PUBLIC METHODS

    def get_dimension(self) -> int:
        """
        Get the spatial dimension D, which fixes the reduced wavefunction u = q^((D-1)/2) ψ.

        :return:    The spatial dimension.
        """
        if self is ECoordinateType.CARTESIAN:
            return 1
        elif self is ECoordinateType.PLANE_POLAR:
            return 2
        else:
            return 3

    def is_radial(self) -> bool:
        return self is not ECoordinateType.CARTESIAN


class ESystemName(Enum):
    """The physical systems in the catalog. The values are the names by which they are addressed on the command line."""

    FREE1D = "free1d"
    FREE2D = "free2d"
    FREE3D = "free3d"
    LINEAR = "linear"
    HYDROGEN = "hydrogen"
    MORSE = "morse"

    # PUBLIC METHODS

    def get_coordinate_type(self) -> ECoordinateType:
        """
        Get the coordinate type in which the system is solved.

        :return:    The coordinate type.
        """
        if self is ESystemName.FREE2D:
            return ECoordinateType.PLANE_POLAR
        elif self in (ESystemName.FREE3D, ESystemName.HYDROGEN):
            return ECoordinateType.SPHERICAL
        else:
            return ECoordinateType.CARTESIAN

    def get_display_name(self) -> str:
        """
        Get the name under which the system is reported.

        :return:    The display name.
        """
        return _DISPLAY_NAMES[self]

    # PUBLIC STATIC METHODS

    @staticmethod
    def parse(name: str) -> "ESystemName":
        """
        Parse a system name, as given on the command line.

        :param name:                    The name (case-insensitive).
        :return:                        The corresponding system.
        :raises UnsupportedSystemError: If the name does not denote a supported system.
        """
        for system in ESystemName:
            if system.value == name.strip().lower():
                return system
        raise UnsupportedSystemError("Unknown system '{}'; valid names are: {}".format(
            name, ", ".join(s.value for s in ESystemName)
        ))


_DISPLAY_NAMES = {
    ESystemName.FREE1D: "Free1D",
    ESystemName.FREE2D: "Free2D",
    ESystemName.FREE3D: "Free3D",
    ESystemName.LINEAR: "Linear1D",
    ESystemName.HYDROGEN: "HydrogenContinuum",
    ESystemName.MORSE: "Morse1D"
}
