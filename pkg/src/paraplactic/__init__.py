"""
Copyright (c) 2025 paraplactic developers. All rights reserved.

paraplactic: Exact super tableaux, parastatistics characters, Hecke algebra
idempotents and the signed super-plactic monoid
"""

from paraplactic._version import version as __version__

__all__ = ["__version__"]
