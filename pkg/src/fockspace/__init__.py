"""Level-one Fock space of U_q(affine sl_ell): wedges, crystals, global bases, D(q)."""

__version__ = "0.1.0"

from .qlaurent import LaurentPoly
from .partitions import Partition
from .fock import FockVector

__all__ = ["LaurentPoly", "Partition", "FockVector", "__version__"]
