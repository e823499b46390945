import argparse
import sys

from src.bost_connes.crossed_product import BCElem, bc_rationalize
from src.dynamical.graded_endo import (
    dyn_disjoint_union,
    dyn_product,
    dyn_rho_tilde_n,
    dyn_sigma_n,
)
from src.dynamical.spectrum import quasi_unipotent_check, spectrum_euler
from src.equivariant.bold_k0 import bold_chi
from src.equivariant.orbit_sum import chi_hat_z, eq_rho_tilde_n, eq_sigma_n, orbit_product
from src.expectation.gibbs import expectation_bc, expectation_class, expectation_groupring, format_complex
from src.expectation.hodge import hodge_expectation
from src.expectation.zeta import hurwitz_zeta
from src.group_ring.group_ring import in_fixed_subring, pi_n, rho_n, rho_tilde_n, sigma_n
from src.scissors.assembler import (
    finite_set_assembler,
    induced_k0_map,
    k0_from_presentation,
    orbit_basis,
)
from src.selftest.runner import run_selftest
from src.selftest.suites import SUITES
from src.serialization import codec
from src.utils.config import (
    DEFAULT_SEED,
    DEFAULT_TRUNCATION_LEVEL,
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_SCHEMA_ERROR,
    EXIT_SELFTEST_FAILED,
)
from src.utils.errors import BostConnesError, SchemaError
from src.utils.logger import configure_logging, get_logger
from src.witt.burnside import burnside_to_witt, table_of_marks, witt_to_burnside
from src.witt.truncation import TruncationSet
from src.witt.witt_vector import witt_frobenius, witt_from_ghost, witt_ghost, witt_verschiebung

logger = get_logger(__name__)

COMMANDS = {
    "groupring": ["mul", "sigma", "rho", "pi", "subring"],
    "bc": ["mul", "rationalize"],
    "equiv": ["product", "sigma", "rho", "chi"],
    "witt": ["ghost", "from-ghost", "add", "mul", "frob", "versch", "from-burnside", "to-burnside", "marks"],
    "dyn": ["check", "spectrum", "sigma", "rho", "product", "union"],
    "expect": ["value", "class", "hodge", "zeta", "bc"],
    "k0": ["compute", "induced", "finite-sets"],
}


def _common_flags():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--elem", help="JSON payload, or @path to a JSON file")
    common.add_argument("--other", help="Second JSON payload for binary operations")
    common.add_argument("--n", type=int, help="Index n of sigma_n, rho~_n, F_n, V_n or the level N")
    common.add_argument("--beta", type=float, help="Inverse temperature (> 1)")
    common.add_argument("--twist", type=int, default=1, help="Galois twist k of the embedding")
    common.add_argument("--shift", type=float, default=1.0, help="Hurwitz parameter a in (0, 1]")
    common.add_argument("--trunc", help="Truncation set: JSON list of divisors or an integer N")
    common.add_argument("--signed", action="store_true", help="Weight degree k by (-1)^k")
    common.add_argument("--allow-zero", action="store_true", help="Accept the eigenvalue 0")
    common.add_argument("--normalized", action="store_true", help="groupring rho: rho_n instead of rho~_n")
    common.add_argument("--map", help="k0 induced: JSON object map label -> label(s)")
    common.add_argument("--mult", help="k0 induced: JSON multiplicity map label -> integer")
    common.add_argument("--basis", help="k0 induced: JSON [source labels, target labels]")
    common.add_argument("--stdin", action="store_true", help="Read payloads from a JSON object on stdin")
    common.add_argument("--pretty", action="store_true", help="Indent JSON output")
    common.add_argument("--verbose", action="store_true", help="Log progress on stderr")
    return common


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bost-connes",
        description="Exact Bost-Connes algebra toolkit with JSON input and output",
    )
    groups = parser.add_subparsers(dest="group", required=True)
    common = _common_flags()
    for group, operations in COMMANDS.items():
        sub = groups.add_parser(group).add_subparsers(dest="operation", required=True)
        for operation in operations:
            sub.add_parser(operation, parents=[common])
    selftest = groups.add_parser("selftest", help="Run the invariant suites")
    selftest.add_argument("--suite", action="append", choices=sorted(SUITES), help="Run only this suite (repeatable)")
    selftest.add_argument("--seed", type=int, default=DEFAULT_SEED)
    selftest.add_argument("--verbose", action="store_true")
    return parser


class BostConnesCLI:
    """Dispatches one parsed command line to the library and prints the result"""

    def __init__(self, args, stdin=None, stdout=None):
        self.args = args
        self.stdin = stdin or sys.stdin
        self.stdout = stdout or sys.stdout
        self._stdin_payload = None

    # Payload access

    def _raw(self, name):
        value = getattr(self.args, name, None)
        if value is None and getattr(self.args, "stdin", False):
            if self._stdin_payload is None:
                self._stdin_payload = codec.loads(self.stdin.read(), "stdin")
                if not isinstance(self._stdin_payload, dict):
                    raise SchemaError("stdin", "expected a JSON object with payload fields")
            if name in self._stdin_payload:
                return self._stdin_payload[name]
        if value is None:
            return None
        if value.startswith("@"):
            try:
                with open(value[1:], encoding="utf-8") as handle:
                    value = handle.read()
            except OSError as exc:
                raise SchemaError(name, f"cannot read {value[1:]} ({exc.strerror})") from None
        return codec.loads(value, name)

    def payload(self, name, required=True):
        value = self._raw(name)
        if value is None and required:
            raise SchemaError(name, "missing (pass --" + name + " or --stdin)")
        return value

    def number(self, name):
        value = getattr(self.args, name)
        if value is None:
            raise SchemaError(name, "missing (pass --" + name.replace("_", "-") + ")")
        if name == "n" and value < 1:
            raise SchemaError(name, "must be a positive integer")
        return value

    def truncation(self, default=None):
        payload = self._raw("trunc")
        if payload is None:
            return default
        return codec.decode_truncation(payload, "trunc")

    # Output

    def emit(self, payload):
        print(codec.dumps(payload, self.args.pretty), file=self.stdout)

    def emit_text(self, text):
        print(text, file=self.stdout)

    # groupring

    def groupring_mul(self):
        x = codec.decode_group_ring(self.payload("elem"), "elem")
        y = codec.decode_group_ring(self.payload("other"), "other")
        self.emit(codec.encode_group_ring(x * y))

    def groupring_sigma(self):
        x = codec.decode_group_ring(self.payload("elem"), "elem")
        self.emit(codec.encode_group_ring(sigma_n(self.number("n"), x)))

    def groupring_rho(self):
        x = codec.decode_group_ring(self.payload("elem"), "elem")
        n = self.number("n")
        result = rho_n(n, x.to_rational()) if self.args.normalized else rho_tilde_n(n, x)
        self.emit(codec.encode_group_ring(result))

    def groupring_pi(self):
        self.emit(codec.encode_group_ring(pi_n(self.number("n"))))

    def groupring_subring(self):
        x = codec.decode_group_ring(self.payload("elem"), "elem")
        self.emit(codec.encode_membership(in_fixed_subring(x)))

    # bc

    def bc_mul(self):
        u = codec.decode_bc(self.payload("elem"), "elem")
        v = codec.decode_bc(self.payload("other"), "other")
        if type(u) is not type(v):
            raise SchemaError("other", "integral and rational normal forms cannot be multiplied")
        self.emit(codec.encode_normal_form(u * v))

    def bc_rationalize(self):
        u = codec.decode_bc(self.payload("elem"), "elem")
        if not isinstance(u, BCElem):
            raise SchemaError("elem", "already has rational coefficients")
        self.emit(codec.encode_normal_form(bc_rationalize(u)))

    # equiv

    def equiv_product(self):
        x = codec.decode_orbit_sum(self.payload("elem"), "elem")
        y = codec.decode_orbit_sum(self.payload("other"), "other")
        self.emit(codec.encode_orbit_sum(orbit_product(x, y)))

    def equiv_sigma(self):
        x = codec.decode_orbit_sum(self.payload("elem"), "elem")
        self.emit(codec.encode_orbit_sum(eq_sigma_n(self.number("n"), x)))

    def equiv_rho(self):
        x = codec.decode_orbit_sum(self.payload("elem"), "elem")
        self.emit(codec.encode_orbit_sum(eq_rho_tilde_n(self.number("n"), x)))

    def equiv_chi(self):
        payload = self.payload("elem")
        if isinstance(payload, list):
            self.emit(codec.encode_normal_form(bold_chi(codec.decode_bold(payload, "elem"))))
        else:
            self.emit(codec.encode_group_ring(chi_hat_z(codec.decode_orbit_sum(payload, "elem"))))

    # witt

    def witt_ghost(self):
        w = codec.decode_witt(self.payload("elem"), "elem")
        self.emit(codec.encode_ghosts(witt_ghost(w)))

    def witt_from_ghost(self):
        ghosts = codec.decode_ghosts(self.payload("elem"), "elem")
        trunc = self.truncation() or TruncationSet(tuple(sorted(ghosts)))
        self.emit(codec.encode_witt(witt_from_ghost(trunc, ghosts)))

    def witt_add(self):
        a = codec.decode_witt(self.payload("elem"), "elem")
        b = codec.decode_witt(self.payload("other"), "other")
        self.emit(codec.encode_witt(a + b))

    def witt_mul(self):
        a = codec.decode_witt(self.payload("elem"), "elem")
        b = codec.decode_witt(self.payload("other"), "other")
        self.emit(codec.encode_witt(a * b))

    def witt_frob(self):
        w = codec.decode_witt(self.payload("elem"), "elem")
        self.emit(codec.encode_witt(witt_frobenius(self.number("n"), w)))

    def witt_versch(self):
        w = codec.decode_witt(self.payload("elem"), "elem")
        self.emit(codec.encode_witt(witt_verschiebung(self.number("n"), w, self.truncation())))

    def witt_from_burnside(self):
        x = codec.decode_orbit_sum(self.payload("elem"), "elem")
        trunc = self.truncation(TruncationSet.of_level(DEFAULT_TRUNCATION_LEVEL))
        self.emit(codec.encode_witt(burnside_to_witt(x, trunc)))

    def witt_to_burnside(self):
        w = codec.decode_witt(self.payload("elem"), "elem")
        self.emit(codec.encode_orbit_sum(witt_to_burnside(w)))

    def witt_marks(self):
        labels, marks = table_of_marks(self.number("n"))
        self.emit({"divisors": list(labels), "marks": marks.tolist()})

    # dyn

    def dyn_check(self):
        g = codec.decode_graded(self.payload("elem"), "elem")
        self.emit(codec.encode_certificate(quasi_unipotent_check(g, self.args.allow_zero)))

    def dyn_spectrum(self):
        g = codec.decode_graded(self.payload("elem"), "elem")
        self.emit(codec.encode_group_ring(spectrum_euler(g, self.args.signed)))

    def dyn_sigma(self):
        g = codec.decode_graded(self.payload("elem"), "elem")
        self.emit(codec.encode_graded(dyn_sigma_n(self.number("n"), g)))

    def dyn_rho(self):
        g = codec.decode_graded(self.payload("elem"), "elem")
        self.emit(codec.encode_graded(dyn_rho_tilde_n(self.number("n"), g)))

    def dyn_product(self):
        g = codec.decode_graded(self.payload("elem"), "elem")
        h = codec.decode_graded(self.payload("other"), "other")
        self.emit(codec.encode_graded(dyn_product(g, h)))

    def dyn_union(self):
        g = codec.decode_graded(self.payload("elem"), "elem")
        h = codec.decode_graded(self.payload("other"), "other")
        self.emit(codec.encode_graded(dyn_disjoint_union(g, h)))

    # expect

    def expect_value(self):
        x = codec.decode_group_ring(self.payload("elem"), "elem")
        self.emit_text(format_complex(expectation_groupring(x, self.number("beta"), self.args.twist)))

    def expect_class(self):
        x = codec.decode_orbit_sum(self.payload("elem"), "elem")
        self.emit_text(format_complex(expectation_class(x, self.number("beta"), self.args.twist)))

    def expect_bc(self):
        u = codec.decode_bc(self.payload("elem"), "elem")
        self.emit_text(format_complex(expectation_bc(u, self.number("beta"), self.args.twist)))

    def expect_hodge(self):
        table = codec.decode_hodge_table(self.payload("elem"), "elem")
        polynomial = hodge_expectation(table, self.number("beta"), self.args.twist)
        self.emit({
            "terms": [{"p": p, "q": q, "value": format_complex(c)} for (p, q), c in polynomial.coefficients],
            "weights": {str(w): format_complex(c) for w, c in polynomial.weight_polynomial().items()},
            "at_one": format_complex(polynomial.at_one()),
        })

    def expect_zeta(self):
        self.emit(hurwitz_zeta(self.number("beta"), self.args.shift))

    # k0

    def k0_compute(self):
        p = codec.decode_presentation(self.payload("elem"), "elem")
        self.emit(codec.encode_k0(k0_from_presentation(p)))

    def k0_induced(self):
        p = codec.decode_presentation(self.payload("elem"), "elem")
        q = codec.decode_presentation(self.payload("other"), "other")
        object_map = self.payload("map")
        if not isinstance(object_map, dict):
            raise SchemaError("map", "expected an object mapping labels to labels")
        for label, image in object_map.items():
            parts = [image] if isinstance(image, str) else image
            if not isinstance(parts, list) or not all(isinstance(part, str) for part in parts):
                raise SchemaError(f"map.{label}", "expected a label or a list of labels")
        multiplicity = self.payload("mult", required=False)
        if multiplicity is not None:
            if not isinstance(multiplicity, dict):
                raise SchemaError("mult", "expected an object mapping labels to integers")
            for label, weight in multiplicity.items():
                if isinstance(weight, bool) or not isinstance(weight, int):
                    raise SchemaError(f"mult.{label}", f"expected int, got {type(weight).__name__}")
        basis = self.payload("basis", required=False)
        if basis is not None and (not isinstance(basis, list) or len(basis) != 2):
            raise SchemaError("basis", "expected [source labels, target labels]")
        self.emit({"matrix": induced_k0_map(p, q, object_map, multiplicity, basis)})

    def k0_finite_sets(self):
        n = self.number("n")
        presentation = finite_set_assembler(n)
        k0 = k0_from_presentation(presentation)
        self.emit({
            "level": n,
            "objects": len(presentation.objects),
            "families": len(presentation.families),
            "rank": k0.rank,
            "torsion": list(k0.torsion),
            "orbit_basis": orbit_basis(n),
        })

    def run(self):
        handler = getattr(self, f"{self.args.group}_{self.args.operation.replace('-', '_')}")
        handler()
        return EXIT_OK


def main(argv=None):
    """Entry point"""
    args = build_parser().parse_args(argv)
    configure_logging("INFO" if args.verbose else None)
    try:
        if args.group == "selftest":
            passed = run_selftest(args.suite, args.seed)
            return EXIT_OK if passed else EXIT_SELFTEST_FAILED
        return BostConnesCLI(args).run()
    except SchemaError as exc:
        logger.error("%s", exc)
        return EXIT_SCHEMA_ERROR
    except BostConnesError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
