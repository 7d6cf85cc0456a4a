"""Text syntax for rooted ribbon trees.

Grammar (whitespace allowed between tokens)::

    tree := "*" | "(" tree ("," tree)+ ")"

The i-th ``*`` from the left is leaf i.
"""
from __future__ import annotations

from .trees import LEAF, Leaf, Node, RibbonTree


class TreeSyntaxError(ValueError):
    """Malformed tree text. ``offset`` is the byte offset of the problem."""

    kind = "SyntaxError"

    def __init__(self, message: str, offset: int):
        super().__init__(f"{self.kind} at byte {offset}: {message}")
        self.offset = offset


class EmptyInput(TreeSyntaxError):
    kind = "EmptyInput"


class UnbalancedParens(TreeSyntaxError):
    kind = "UnbalancedParens"


class SingleChildNode(TreeSyntaxError):
    kind = "SingleChildNode"


class TrailingGarbage(TreeSyntaxError):
    kind = "TrailingGarbage"


class UnexpectedCharacter(TreeSyntaxError):
    kind = "UnexpectedCharacter"


_WS = " \t\r\n\f\v"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def byte_offset(self, pos=None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in _WS:
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def tree(self, opens: list) -> RibbonTree:
        ch = self.peek()
        if ch == "*":
            self.pos += 1
            return LEAF
        if ch == "(":
            opens.append(self.pos)
            self.pos += 1
            kids = [self.tree(opens)]
            while self.peek() == ",":
                self.pos += 1
                kids.append(self.tree(opens))
            close = self.peek()
            if close is None:
                raise UnbalancedParens("missing ')' for '(' opened at byte %d" % self.byte_offset(opens[-1]),
                                       self.byte_offset())
            if close != ")":
                raise UnexpectedCharacter(f"expected ',' or ')', found {close!r}", self.byte_offset())
            if len(kids) == 1:
                raise SingleChildNode("a parenthesized node must have at least 2 children",
                                      self.byte_offset(opens[-1]))
            opens.pop()
            self.pos += 1
            return Node(tuple(kids))
        if ch is None:
            if opens:
                raise UnbalancedParens("input ended inside '(' opened at byte %d" % self.byte_offset(opens[-1]),
                                       self.byte_offset())
            raise EmptyInput("no tree found", self.byte_offset())
        if ch == ")":
            raise UnbalancedParens("unexpected ')'", self.byte_offset())
        raise UnexpectedCharacter(f"expected '*' or '(', found {ch!r}", self.byte_offset())


def parse(text: str) -> RibbonTree:
    p = _Parser(text)
    if p.peek() is None:
        raise EmptyInput("no tree found", p.byte_offset())
    tree = p.tree([])
    rest = p.peek()
    if rest is not None:
        if rest == ")":
            raise UnbalancedParens("unmatched ')'", p.byte_offset())
        raise TrailingGarbage(f"unexpected {rest!r} after a complete tree", p.byte_offset())
    return tree


def serialize(tree: RibbonTree) -> str:
    if isinstance(tree, Leaf):
        return "*"
    return "(" + ",".join(serialize(ch) for ch in tree.children) + ")"


def normalize(text: str) -> str:
    return "".join(ch for ch in text if ch not in _WS)


def as_tree(value) -> RibbonTree:
    """Accept either a tree or its text form."""
    if isinstance(value, (Leaf, Node)):
        return value
    return parse(value)
