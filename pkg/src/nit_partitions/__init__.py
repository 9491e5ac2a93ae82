"""
Exact state partitions for radix-n quantum information.

Subpackages: ``partitions`` (frames and permutations), ``operators``
(diagonal nit and context operators), ``basis`` (exact vectors and
diagonal bases), ``search`` (n-ary search strategies) and ``cli``.
"""

__version__ = "0.1.0"
