"""Iterated run-length decoding, its permutation automaton and the groups it generates."""

from .errors import (
    BudgetExceeded,
    CapExceeded,
    DepthMismatch,
    DomainMismatch,
    EmptySequence,
    EmptyWord,
    EvenN,
    InvalidAlphabet,
    InvalidDigit,
    InvariantViolation,
    LeafOutOfRange,
    ModulusMismatch,
    NotAMember,
    RLDGroupError,
    SwappedPrefix,
)
from .rld import Alphabet, emit_blocks, opp, opp_end, rld, rld_levels, rld_n
from .automaton import (
    TransitionTable,
    build_table,
    decode,
    encode,
    inverse_step,
    step,
    step_word,
    symbol_permutation,
    to_dot,
    word_permutation,
)
from .tree import (
    TreeAut,
    act_on_leaf,
    from_hex,
    from_parts,
    identity,
    inverse,
    mul,
    restrict,
    to_hex,
    to_permutation,
)
from .jn import (
    DihedralElem,
    Residue,
    delta,
    dihedral_mul,
    enumerate_jn,
    first_violation,
    gen_f,
    gen_p,
    gen_q,
    gen_y,
    is_member,
    jn_order_exponent,
    phi,
    psi,
)
from .schreier import Bsgs, OrderExponent, build_bsgs, contains, order_exponent, sift
from .order import ConjectureReport, kn_order_exponent, verify_conjecture
from .orbits import (
    OrbitReport,
    cycle_structure,
    describe_orbits,
    group_level_criterion,
    square_split_check,
    theorem3_predicate,
    verify_theorem3,
)

__version__ = "0.1.0"
