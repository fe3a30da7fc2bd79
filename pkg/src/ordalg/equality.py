"""Three-valued order-type equality.

Normal forms that coincide are Equal.  Otherwise the structural profiles at
both levels are compared; any difference refutes isomorphism.  When neither
test decides, the answer is Unknown rather than a guess.
"""

from __future__ import annotations

import enum

from .classify import Level, profile
from .errors import UnsupportedFragment
from .normalize import normalize
from .terms import OrderTerm


class Eq(enum.Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    UNKNOWN = "Unknown"


def eq_order_type(a: OrderTerm, b: OrderTerm) -> Eq:
    na, nb = normalize(a), normalize(b)
    if na == nb:
        return Eq.EQUAL
    for level in Level:
        try:
            if profile(na, level) != profile(nb, level):
                return Eq.NOT_EQUAL
        except UnsupportedFragment:
            continue
    return Eq.UNKNOWN
