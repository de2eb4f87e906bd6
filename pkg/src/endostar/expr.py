"""
Text syntax for algebra elements.

    source     := expression EOF
    expression := product (('+' | '-') product)*
    product    := factor (('*' factor) | postfix)*
    factor     := '-' factor | postfix
    postfix    := atom adjoint*              adjoint := "^*" | "*"
    atom       := 'e[' ['{' element '}'] lattice ']' | 'u{' element '}'
                | number | 'i' | 's' | '(' expression ')'
    lattice    := term ('&' term)*          term := 'phi^n' [base | '(' base ')'] | base

``^*`` is always the adjoint. A bare ``*`` written right after an atom is the
adjoint unless the start of another atom follows it immediately, so ``s* s`` and
``s^*s`` are the adjoint of s times s, while ``s*s`` and ``s * s`` are s².
Juxtaposition multiplies.
"""

import functools

from arpeggio import EOF, NoMatch, Optional, ParserPython, PTNodeVisitor, ZeroOrMore
from arpeggio import RegExMatch as _
from arpeggio import visit_parse_tree

from .algebra import AlgebraElement, Monomial, StarAlgebra
from .errors import ExpressionSyntaxError
from .groups import LatticeSubgroup
from .lattice import BasicCoset
from .scalars import IMAG, Scalar, format_rational, scalar

# grammar


def source():
    return expression, EOF


def expression():
    return product, ZeroOrMore(add_op, product)


def add_op():
    return _(r"[+-]")


def product():
    return factor, ZeroOrMore([(mul_op, factor), postfix])


def mul_op():
    return "*"


def factor():
    return [negation, postfix]


def negation():
    return "-", factor


def postfix():
    return atom, ZeroOrMore(adjoint)


def adjoint():
    return _(r"\^\*|(?<!\s)\*(?![0-9(iseu])")


def atom():
    return [projection, unitary, number, imag, isometry, parenthesized]


def parenthesized():
    return "(", expression, ")"


def number():
    return _(r"\d+(?:/\d+)?")


def imag():
    return "i"


def isometry():
    return "s"


def unitary():
    return "u{", element, "}"


def element():
    return _(r"[^}]*")


def projection():
    return "e[", Optional(coset_rep), lattice, "]"


def coset_rep():
    return "{", element, "}"


def lattice():
    return lattice_term, ZeroOrMore(meet, lattice_term)


def meet():
    return "&"


def lattice_term():
    return [image_term, base]


def image_term():
    return power, Optional([("(", base, ")"), base])


def power():
    return _(r"phi(?:\^\d+)?")


def base():
    return _(r"\w+")


@functools.cache
def _parser() -> ParserPython:
    return ParserPython(source)


def _elements(children) -> list[AlgebraElement]:
    return [c for c in children if isinstance(c, AlgebraElement)]


class ExpressionVisitor(PTNodeVisitor):
    """Builds canonical elements bottom-up from the parse tree."""

    def __init__(self, algebra: StarAlgebra, **kwargs):
        super().__init__(**kwargs)
        self.algebra = algebra
        self.group = algebra.group

    def visit_source(self, node, children):
        return children.results["expression"][0]

    def visit_expression(self, node, children):
        first, *rest = _elements(children)
        for op, term in zip(children.results.get("add_op", []), rest):
            first = first + term if op == "+" else first - term
        return first

    def visit_add_op(self, node, children):
        return node.value

    def visit_product(self, node, children):
        return self.algebra.mul(*_elements(children))

    def visit_mul_op(self, node, children):
        return None

    def visit_negation(self, node, children):
        return -_elements(children)[0]

    def visit_postfix(self, node, children):
        (result,) = _elements(children)
        for _star in children.results.get("adjoint", []):
            result = self.algebra.adjoint(result)
        return result

    def visit_adjoint(self, node, children):
        return "*"

    def visit_parenthesized(self, node, children):
        return children.results["expression"][0]

    def visit_number(self, node, children):
        try:
            return self.algebra.one().scaled(scalar(node.value))
        except (ValueError, ZeroDivisionError) as e:
            raise ExpressionSyntaxError(str(e), node.position) from e

    def visit_imag(self, node, children):
        return self.algebra.one().scaled(IMAG)

    def visit_isometry(self, node, children):
        return self.algebra.s()

    def visit_unitary(self, node, children):
        return self.algebra.u(children.results["element"][0])

    def visit_element(self, node, children):
        try:
            return self.group.parse_element(node.value)
        except ValueError as e:
            raise ExpressionSyntaxError(
                f"bad group element {node.value!r}: {e}", node.position
            ) from e

    def visit_projection(self, node, children):
        L = children.results["lattice"][0]
        rep = children.results.get("coset_rep", [self.group.identity])[0]
        return self.algebra.e(BasicCoset(self.group.coset_rep(rep, L), L))

    def visit_coset_rep(self, node, children):
        return children.results["element"][0]

    def visit_lattice(self, node, children):
        try:
            return self.group.lattice(children.results["lattice_term"])
        except ValueError as e:
            raise ExpressionSyntaxError(str(e), node.position) from e

    def visit_meet(self, node, children):
        return None

    def visit_lattice_term(self, node, children):
        (term,) = children
        return term if isinstance(term, tuple) else (0, term)

    def visit_image_term(self, node, children):
        (n,) = children.results["power"]
        bases = children.results.get("base", ["G"])
        return n, bases[0]

    def visit_power(self, node, children):
        exponent = node.value.partition("^")[2]
        return int(exponent or 1)

    def visit_base(self, node, children):
        return node.value


def parse_expr(algebra: StarAlgebra, text: str) -> AlgebraElement:
    """
    Canonical element of ``text``.

    A bare ``*`` between two atoms multiplies: ``s*s`` is s², not s·s*. Write
    ``s^*s`` or ``s* s`` for the adjoint followed by s.
    """

    try:
        tree = _parser().parse(text)
    except NoMatch as e:
        where = e.position
        found = repr(text[where]) if where < len(text) else "end of expression"
        raise ExpressionSyntaxError(f"unexpected {found}", where) from e
    return visit_parse_tree(tree, ExpressionVisitor(algebra))


# formatting


def format_lattice(L: LatticeSubgroup) -> str:
    return " & ".join(f"phi^{n} {base}" if n else base for n, base in L.terms)


def format_scalar(c: Scalar) -> str:
    if not c.y:
        return format_rational(c.x)
    return f"{format_rational(c.x)} + {format_rational(c.y)} i"


def format_monomial(algebra: StarAlgebra, mono: Monomial) -> str:
    group = algebra.group
    parts = ["s*"] * mono.n
    if mono.a != group.identity:
        parts.append(f"u{{{group.format_element(mono.a)}}}")
    # the range projections of s^m and s*^n are implied
    implied = algebra.canonical(Monomial(mono.n, mono.a, group.whole(), mono.b, mono.m))
    if mono.L != group.whole() and implied != mono:
        parts.append(f"e[{format_lattice(mono.L)}]")
    if mono.b != group.identity:
        parts.append(f"u{{{group.format_element(mono.b)}}}")
    parts += ["s"] * mono.m
    return " ".join(parts) or "1"


def format_expr(algebra: StarAlgebra, x: AlgebraElement) -> str:
    """Text that :func:`parse_expr` reads back as x."""

    if not x:
        return "0"
    terms = []
    for mono, c in x.items():
        body = format_monomial(algebra, mono)
        if c == scalar(1):
            terms.append(body)
        else:
            terms.append(f"({format_scalar(c)}) {body}")
    return " + ".join(terms)
