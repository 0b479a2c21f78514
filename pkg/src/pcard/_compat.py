"""Version shims. On Python >= 3.11 these are the standard-library objects."""

try:
    from enum import StrEnum
except ImportError:  # Python 3.10
    from enum import Enum

    class StrEnum(str, Enum):  # type: ignore[no-redef]
        """Backport of `enum.StrEnum`: members str() and format() as their value."""

        __str__ = str.__str__
        __format__ = str.__format__

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):  # type: ignore[override]
            return name.lower()


__all__ = ["StrEnum"]
