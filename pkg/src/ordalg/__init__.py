"""Symbolic calculator for linear-order types and their condensations.

The package works with terms denoting linear orders (ordinals, their
reverses, the integers, the rationals, the lengthened rational line U,
and sums and lexicographic products of these), condenses them by the
finite- and countable-interval relations, multiplies them modulo
condensation, decides right identities, and constructs embeddings into
the rationals and into U.
"""

from .algebra import (ClosureTable, LawReport, check_left_regular_band,
                      check_semigroup, closure_table, mul_f, mul_level,
                      mul_omega)
from .classify import (ALEPH0, ALEPH1, ALEPH2PLUS, CardClass, Cof, Level,
                       Profile, card_of, check_tfae, cofinality,
                       coinitiality, condenses_to_one, is_small, profile,
                       right_identity, small_head, small_tail)
from .cnf import CNF
from .condense import CondResult, cc
from .embed import EmbedCertificate, NotEmbeddable, embed_into_u
from .equality import Eq, eq_order_type
from .errors import (InvalidCode, InvalidSample, NoEndpoint, OrdalgError,
                     ParseError, UnsupportedFragment, VerificationFailed)
from .generate import GEN_ATOMS, sample_terms, terms_to_depth
from .normalize import (detach_first, detach_last, has_first, has_last,
                        normalize)
from .oracle import oracle_report
from .parser import parse, parse_with_flags
from .points import (SPINE, Side, UPoint, cantor_embed, compare_points,
                     head_card, interval_class, interval_is_small,
                     point_to_json, sample_points, tail_card)
from .quotientmap import class_index
from .terms import (ATOMS, EMPTY, ETA, OMEGA, OMEGA1, OMEGA1_STAR, OMEGA2,
                    OMEGA2_STAR, OMEGA_STAR, ONE, U_LINE, ZETA, FinChain,
                    LexProd, OrderTerm, Rev, Sum, fin, pretty, reverse)

__version__ = "1.0.0"
