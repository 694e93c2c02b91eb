"""Orders of the automaton groups K_n and the comparison with |J_n|."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .automaton import build_table
from .errors import CapExceeded
from .jn import enumerate_jn, gen_p, gen_q, gen_y, is_member, jn_order_exponent, ENUM_CAP
from .rld import Alphabet
from .schreier import Bsgs, OrderExponent, build_bsgs, contains, order_exponent
from .tree import to_permutation

ORDER_CAP = 14
REPORT_VERSION = 1


def kn_bsgs(a: Alphabet, n: int, cap: int = ORDER_CAP) -> Bsgs:
    if n > cap:
        raise CapExceeded(f"K_n order: n={n} exceeds cap {cap}")
    return build_bsgs(list(build_table(a, n).images))


def kn_order_exponent(a: Alphabet, n: int, cap: int = ORDER_CAP) -> OrderExponent:
    """log2 |K_n^{p,q}| from a stabilizer chain on the 2^n automaton states."""
    return order_exponent(kn_bsgs(a, n, cap))


@dataclass
class ConjectureRecord:
    n: int
    k_exponent: int
    j_formula_exponent: int
    equal: bool
    exact: bool
    generators_in_jn: bool
    containment_checked: bool
    containment_ok: bool | None
    orbit_sizes: list = field(default_factory=list)


@dataclass
class ConjectureReport:
    p: int
    q: int
    records: list

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.records)

    @property
    def all_exact(self) -> bool:
        return all(r.exact for r in self.records)

    @property
    def exponents(self) -> list:
        return [r.k_exponent for r in self.records]

    def to_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "p": self.p,
            "q": self.q,
            "records": [asdict(r) for r in self.records],
            "all_equal": self.all_equal,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        """The comparison table, one column per n."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n"] + [r.n for r in self.records])
        w.writerow(["log2|J_n|"] + [r.j_formula_exponent for r in self.records])
        w.writerow(["log2|K_n|"] + [r.k_exponent for r in self.records])
        return buf.getvalue()


def jn_subset_of_kn(a: Alphabet, n: int, bsgs: Bsgs | None = None) -> bool:
    """Sift every element of J_n through a chain for K_n."""
    bsgs = bsgs or kn_bsgs(a, n)
    return all(contains(bsgs, to_permutation(g)) for g in enumerate_jn(a, n))


def _record(a: Alphabet, n: int, containment_max: int) -> ConjectureRecord:
    bsgs = kn_bsgs(a, n)
    oe = order_exponent(bsgs)
    expected = jn_order_exponent(n)
    gens_ok = all(is_member(a, g) for g in (gen_p(a, n), gen_q(a, n), gen_y(a, n)))
    checked = n <= min(containment_max, ENUM_CAP)
    return ConjectureRecord(
        n=n,
        k_exponent=oe.exp,
        j_formula_exponent=expected,
        equal=oe.exact and oe.exp == expected,
        exact=oe.exact,
        generators_in_jn=gens_ok,
        containment_checked=checked,
        containment_ok=jn_subset_of_kn(a, n, bsgs) if checked else None,
        orbit_sizes=list(oe.orbit_sizes),
    )


def _record_args(args):
    return _record(*args)


def verify_conjecture(a: Alphabet, n_max: int, containment_max: int = ENUM_CAP,
                      workers: int = 1) -> ConjectureReport:
    """Compare log2|K_n| with the J_n order formula for n = 1..n_max.

    For small n the report also sifts all of J_n through the K_n chain;
    together with the order match this shows J_n = K_n there.
    """
    if n_max > ORDER_CAP:
        raise CapExceeded(f"n_max={n_max} exceeds cap {ORDER_CAP}")
    cells = [(a, n, containment_max) for n in range(1, n_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = list(pool.map(_record_args, cells))
    else:
        records = [_record(*c) for c in cells]
    return ConjectureReport(a.p, a.q, records)

