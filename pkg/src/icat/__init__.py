"""icat: exact machine verification of internal categories in vector spaces,
their Kleisli-type constructions, and the dual world of corings."""

from .matrix import Matrix, kernel_backend

__all__ = ["Matrix", "kernel_backend"]
__version__ = "0.1.0"
