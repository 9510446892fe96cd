"""Dependency trees, local tree languages and their (anti-)projective linearisations."""

from .errors import *  # noqa: F401,F403
from .trees import (Tree, anti_subtree, anti_vertices, atomic, chain, depth,
                    format_address, make_tree, parse_address, reverse, root,
                    subtree, top, vertices)
from .locality import (ANTI, LOCAL, LocalSpec, LocalStringSpec, anti_p_subtrees,
                       anti_terminal_p_subtrees, encode_string_spec, enumerate_trees,
                       member, p_subtrees, reverse_spec, string_member,
                       terminal_p_subtrees)
from .linearise import (Linearisation, PositionedString, Slot, linearize,
                        linearize_positions, parse_linearisation, projective,
                        reverse_linearisation)
from .grammar import (Grammar, GnfGrammar, cfg_enumerate, cfg_from_local,
                      cyk_member, distinct_vars_transform, local_from_gnf,
                      validate_gnf)

__version__ = "0.1.0"
