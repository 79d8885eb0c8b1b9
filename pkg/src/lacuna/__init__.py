"""Exact lacunary recurrences for Lucas, Fibonacci and Pell numbers.

The square/domino counting argument behind the Lucas recurrence is checked
by exhaustive enumeration in :mod:`lacuna.tilings`.
"""
from .errors import BoundError, DomainError
from .identities import VerificationReport
from .lacunary import (LacunaryExpansion, congruence, fib_lacunary, gap_depth,
                       lucas_eval, lucas_expand, pell_lacunary)
from .seqcore import (FIBONACCI, LUCAS, PELL, SequenceSpec, board_count,
                      bracelet_count, fast_double_fib, fib, gibonacci, lucas,
                      pell, term)

__version__ = "0.1.0"
