"""Command-line interface.

Inputs named TREE, SPEC, GRAMMAR or LIN may be a fixture name (see
``fixture list``), a file path, or ``-`` for standard input. LIN also accepts
an inline slot list such as ``"sub(alpha), root, sub(beta)"``.

Exit status: 0 on success, 1 on domain errors (the error class name is
printed on stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, List, Optional

from . import analysis, grammar
from .errors import AnticfError
from .fixtures import CATALOG, pi_mult, pi_squa, w_mult_spec, w_squa_spec
from .formats import (format_grammar, format_spec, format_tree, parse_grammar,
                      parse_spec, parse_tree, render_dot, tree_dot)
from .linearise import (format_word, linearize, linearize_positions,
                        parse_linearisation, parse_word, reverse_linearisation)
from .locality import enumerate_trees, member, reverse_spec
from .trees import anti_subtree, format_address, parse_address, reverse, subtree, top


class UsageError(Exception):
    pass


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if not os.path.exists(source):
        raise UsageError(f"no such file or fixture: {source}")
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def _load(source: str, kind: str, parse: Callable):
    fx = CATALOG.get(source)
    if fx is not None:
        if fx.kind != kind:
            raise UsageError(f"fixture {source!r} is a {fx.kind}, not a {kind}")
        return fx.build()
    return parse(_read(source))


def load_tree(source):
    return _load(source, "tree", parse_tree)


def load_spec(source):
    return _load(source, "spec", parse_spec)


def load_grammar(source):
    return _load(source, "grammar", parse_grammar)


def load_lin(source):
    if source in CATALOG or source == "-" or os.path.exists(source):
        return _load(source, "lin", lambda text: parse_linearisation(text.strip()))
    if "root" in source:
        return parse_linearisation(source)
    raise UsageError(f"no such file, fixture or slot list: {source}")


def _word(w) -> str:
    return format_word(w) if w else "epsilon"


def _bounds(p: argparse.ArgumentParser):
    p.add_argument("--max-depth", type=int, required=True,
                   help="deepest address length considered")
    p.add_argument("--max-nodes", type=int, required=True,
                   help="most labelled nodes per tree; results are complete only "
                        "inside both bounds")


# handlers

def cmd_tree_op(args, out):
    t = load_tree(args.tree)
    if args.op == "top":
        if args.p is None:
            raise UsageError("top needs --p")
        r = top(t, args.p)
    elif args.op == "reverse":
        r = reverse(t)
    else:
        if args.at is None:
            raise UsageError(f"{args.op} needs --at")
        at = parse_address(args.at)
        r = subtree(t, at) if args.op == "subtree" else anti_subtree(at, t)
    out.write(format_tree(r))


def cmd_spec_member(args, out):
    out.write(("true" if member(load_spec(args.spec), load_tree(args.tree)) else "false") + "\n")


def cmd_spec_enumerate(args, out):
    spec = load_spec(args.spec)
    lin = load_lin(args.lin) if args.lin else None
    first = True
    for t in enumerate_trees(spec, args.max_depth, args.max_nodes):
        if lin is not None:
            out.write(_word(linearize(lin, t)) + "\n")
            continue
        if not first:
            out.write("\n")
        first = False
        out.write("\n".join(f"{format_address(a)} : {l}" for a, l in t.items()) or "empty")
        out.write("\n")


def cmd_spec_reverse(args, out):
    out.write(format_spec(reverse_spec(load_spec(args.spec))))


def cmd_lin_apply(args, out):
    out.write(_word(linearize(load_lin(args.lin), load_tree(args.tree))) + "\n")


def cmd_lin_positions(args, out):
    pos = linearize_positions(load_lin(args.lin), load_tree(args.tree))
    for a, i in sorted(pos.placement.items(), key=lambda e: e[1]):
        out.write(f"{i}\t{format_address(a)}\t{pos.letters[i - 1]}\n")


def cmd_lin_reverse(args, out):
    out.write(str(reverse_linearisation(load_lin(args.lin))) + "\n")


def cmd_cfg_from_local(args, out):
    out.write(format_grammar(grammar.cfg_from_local(load_spec(args.spec), load_lin(args.lin))))


def cmd_cfg_from_gnf(args, out):
    g = grammar.distinct_vars_transform(grammar.validate_gnf(load_grammar(args.grammar)))
    spec, lin = grammar.local_from_gnf(g, p=args.p)
    out.write(format_spec(spec))
    out.write(f"# linearisation: {lin}\n")


def cmd_cfg_member(args, out):
    g = load_grammar(args.grammar)
    out.write(("true" if grammar.cyk_member(g, parse_word(args.word)) else "false") + "\n")


def cmd_cfg_enumerate(args, out):
    words = grammar.cfg_enumerate(load_grammar(args.grammar), args.max_len)
    for w in sorted(words, key=lambda w: (len(w), w)):
        out.write(_word(w) + "\n")


def cmd_cfg_validate(args, out):
    g = grammar.validate_gnf(load_grammar(args.grammar))
    out.write("valid" + (" (transformed)" if g.transformed else "") + "\n")


def cmd_cfg_transform(args, out):
    out.write(format_grammar(grammar.distinct_vars_transform(
        grammar.validate_gnf(load_grammar(args.grammar)))))


def cmd_dual_pair(args, out):
    rep = analysis.dual_pair(load_spec(args.spec), load_lin(args.lin),
                             args.max_depth, args.max_nodes)
    if args.format == "json":
        out.write(rep.to_json() + "\n")
        return
    out.write(f"# {rep.linearisation}  |  {rep.dual}\n")
    for _, w, v in rep.triples:
        out.write(f"{_word(w)}\t{_word(v)}\n")


def cmd_dual_self(args, out):
    v = analysis.self_dual_check(load_spec(args.spec), load_lin(args.lin),
                                 args.max_depth, args.max_nodes, args.max_len)
    if v:
        out.write(f"self-dual within bounds depth<={args.max_depth} nodes<={args.max_nodes}\n")
    else:
        out.write(f"not self-dual: {_word(v.counterexample)} only in the {v.side}\n")


def cmd_parikh(args, out):
    if (args.tree is None) == (args.word is None):
        raise UsageError("give exactly one of --tree or --word")
    if args.tree is not None:
        t = load_tree(args.tree)
        vec, alphabet = analysis.parikh_tree(t), t.vocabulary
    else:
        w = parse_word(args.word)
        vec, alphabet = analysis.parikh_string(w), set(w)
    for a in sorted(alphabet):
        out.write(f"{a}\t{vec[a]}\n")


def cmd_deplen(args, out):
    rep = analysis.total_dependency_length(load_lin(args.lin), load_tree(args.tree))
    out.write("\n".join(rep.lines()) + "\n")


GROWTH = {
    "squa": (w_squa_spec, pi_squa, 2),
    "copy": (w_squa_spec, lambda: reverse_linearisation(pi_squa()), 2),
    "mult": (w_mult_spec, pi_mult, 3),
    "resp": (w_mult_spec, lambda: reverse_linearisation(pi_mult()), 3),
}


def cmd_growth(args, out):
    if args.fixture:
        make_spec, make_lin, per_level = GROWTH[args.fixture]
        spec, lin = make_spec(), make_lin()
        depth = args.max // per_level
    elif args.spec and args.lin:
        spec, lin = load_spec(args.spec), load_lin(args.lin)
        depth = args.max
    else:
        raise UsageError("give --fixture, or both --spec and --lin")
    rows = sorted(set(analysis.length_growth(lin, spec, depth, args.max)))
    if args.format == "csv":
        out.write(analysis.growth_csv(rows))
    else:
        out.write("".join(f"{n:>4} {l:>6}\n" for n, l in rows))


def cmd_fixture_list(args, out):
    width = max(map(len, CATALOG))
    for name, fx in sorted(CATALOG.items()):
        out.write(f"{name:<{width}}  {fx.kind:<7}  {fx.about}\n")


def cmd_fixture_export(args, out):
    fx = CATALOG.get(args.name)
    if fx is None:
        raise UsageError(f"unknown fixture {args.name!r}")
    obj = fx.build()
    writers = {"tree": format_tree, "spec": format_spec,
               "grammar": format_grammar, "lin": lambda l: f"{l}\n"}
    out.write(writers[fx.kind](obj))


def cmd_dot_tree(args, out):
    out.write(tree_dot(load_tree(args.tree)))


def cmd_dot_render(args, out):
    out.write(render_dot(load_lin(args.lin), load_tree(args.tree)))


# parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="anticf", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    top_sub = ap.add_subparsers(dest="group", required=True)

    def group(name, help):
        g = top_sub.add_parser(name, help=help)
        return g.add_subparsers(dest="command", required=True)

    def cmd(sub, name, fn, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        return p

    s = group("tree", "tree operators")
    p = cmd(s, "op", cmd_tree_op, "apply top, reverse, subtree or anti-subtree")
    p.add_argument("op", choices=["top", "reverse", "subtree", "anti-subtree"])
    p.add_argument("tree", nargs="?", default="-")
    p.add_argument("--p", type=int, help="window depth for top")
    p.add_argument("--at", help="address such as /beta/alpha for (anti-)subtree")

    s = group("spec", "local tree languages")
    p = cmd(s, "member", cmd_spec_member, "is the tree in the language")
    p.add_argument("spec")
    p.add_argument("tree", nargs="?", default="-")
    p = cmd(s, "enumerate", cmd_spec_enumerate, "list accepted trees within bounds")
    p.add_argument("spec")
    _bounds(p)
    p.add_argument("--lin", help="print linearised words instead of trees")
    p = cmd(s, "reverse", cmd_spec_reverse, "spec of the reversed trees")
    p.add_argument("spec")

    s = group("lin", "linearisations")
    p = cmd(s, "apply", cmd_lin_apply, "linearise a tree")
    p.add_argument("lin")
    p.add_argument("tree", nargs="?", default="-")
    p = cmd(s, "positions", cmd_lin_positions, "position of every address")
    p.add_argument("lin")
    p.add_argument("tree", nargs="?", default="-")
    p = cmd(s, "reverse", cmd_lin_reverse, "swap sub and anti slots")
    p.add_argument("lin")

    s = group("cfg", "context-free grammars")
    p = cmd(s, "from-local", cmd_cfg_from_local, "grammar of a projectively linearised spec")
    p.add_argument("spec")
    p.add_argument("lin")
    p = cmd(s, "from-gnf", cmd_cfg_from_gnf, "spec and linearisation of a Greibach grammar")
    p.add_argument("grammar")
    p.add_argument("--p", type=int, default=3, help="window depth (default 3)")
    p = cmd(s, "member", cmd_cfg_member, "CYK membership")
    p.add_argument("grammar")
    p.add_argument("word", help="letters, space-separated if any is longer than one "
                                "character; 'epsilon' for the empty word")
    p = cmd(s, "enumerate", cmd_cfg_enumerate, "all words up to a length")
    p.add_argument("grammar")
    p.add_argument("--max-len", type=int, required=True)
    p = cmd(s, "validate-gnf", cmd_cfg_validate, "check Greibach shape")
    p.add_argument("grammar")
    p = cmd(s, "transform", cmd_cfg_transform, "make body variables pairwise distinct")
    p.add_argument("grammar")

    s = group("dual", "dual pairs")
    p = cmd(s, "pair", cmd_dual_pair, "words under a linearisation and its reverse")
    p.add_argument("spec")
    p.add_argument("lin")
    _bounds(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p = cmd(s, "self-check", cmd_dual_self, "compare both bounded languages")
    p.add_argument("spec")
    p.add_argument("lin")
    _bounds(p)
    p.add_argument("--max-len", type=int, help="only compare words up to this length")

    s = group("analyze", "Parikh vectors and dependency lengths")
    p = cmd(s, "parikh", cmd_parikh, "letter counts of a tree or word")
    p.add_argument("--tree")
    p.add_argument("--word")
    p = cmd(s, "deplen", cmd_deplen, "dependency lengths under a linearisation")
    p.add_argument("lin")
    p.add_argument("tree", nargs="?", default="-")
    p = cmd(s, "growth", cmd_growth, "total dependency length against word length")
    p.add_argument("--fixture", choices=sorted(GROWTH))
    p.add_argument("--spec")
    p.add_argument("--lin")
    p.add_argument("--max", type=int, required=True, help="longest word considered")
    p.add_argument("--format", choices=["csv", "text"], default="csv")

    s = group("fixture", "built-in examples")
    cmd(s, "list", cmd_fixture_list, "list fixtures")
    p = cmd(s, "export", cmd_fixture_export, "print a fixture in its file format")
    p.add_argument("name")

    s = group("dot", "Graphviz output")
    p = cmd(s, "tree", cmd_dot_tree, "tree with addresses as node ids")
    p.add_argument("tree", nargs="?", default="-")
    p = cmd(s, "render", cmd_dot_render, "words in output order with dependency arcs")
    p.add_argument("lin")
    p.add_argument("tree", nargs="?", default="-")
    return ap


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("max_depth", "max_nodes", "max_len", "max", "p"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            parser.error(f"--{name.replace('_', '-')} must be non-negative")
    try:
        args.fn(args, out)
    except UsageError as err:
        parser.error(str(err))
    except (AnticfError, KeyError, ValueError) as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
