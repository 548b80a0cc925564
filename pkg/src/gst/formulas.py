"""
Closed forms for G_{s,t} and complete multipartite graphs
"""
from typing import Sequence

from .view import view
from ..game.models import Player
from ..graphs.families import GstDescriptor
from ..graphs.graph import Configuration
from ..utils.errors import OutOfScopeError


def eta_gst_formula(s: int, t: int) -> int:
    """
    eta(G, r) for every G in G_{s,t} rooted at the K_1 vertex

    t + 2s + 4 when s is even, t + 2s + 3 when s is odd
    """
    if s < 1:
        raise OutOfScopeError(f"G_(s,t) needs s >= 1, got s={s}")
    if t < 2:
        raise OutOfScopeError(f"the G_(s,t) formula covers t >= 2, got t={t}")
    return t + 2 * s + (4 if s % 2 == 0 else 3)


def eta_multipartite_formula(part_sizes: Sequence[int]) -> int:
    """
    eta of the complete multipartite graph with every part of size >= 3

    With parts a_1 <= ... <= a_m and n = sum a_i: 2n - a_1 + 3 when n - a_1
    is even, 2n - a_1 + 2 otherwise. Rooting in a part of size a gives a
    member of G_{n-a, a-1}, and the smallest part attains the maximum.
    """
    parts = sorted(part_sizes)
    if len(parts) < 2:
        raise OutOfScopeError("complete multipartite graphs need at least 2 parts")
    if parts[0] < 3:
        raise OutOfScopeError(f"the multipartite formula needs every part >= 3, got {parts}")
    n = sum(parts)
    a1 = parts[0]
    return 2 * n - a1 + (3 if (n - a1) % 2 == 0 else 2)


def multipartite_max_over_roots(part_sizes: Sequence[int]) -> int:
    """max over parts a_k of eta_gst_formula(n - a_k, a_k - 1)"""
    n = sum(part_sizes)
    return max(eta_gst_formula(n - a, a - 1) for a in part_sizes)


def multipartite_boundary_winner(part_free_counts: Sequence[int], c_x: int) -> Player:
    """
    Winner of a boundary configuration whose S induces a complete multipartite graph

    Args:
        part_free_counts: Pebble-free vertices per part of S
        c_x: Pebbles on the even T vertex x

    Returns:
        MOVER iff (k_m >= k/2 and C(x) >= 2(k - k_m) + 2) or
        (k_m < k/2 and C(x) >= k + 2), where k_m is the largest count
    """
    counts = sorted(part_free_counts)
    if not counts:
        raise OutOfScopeError("need at least one part")
    k = sum(counts)
    if k % 2:
        raise OutOfScopeError(f"k must be even, got {k}")
    if c_x % 2 or c_x < 2:
        raise OutOfScopeError(f"C(x) must be an even number >= 2, got {c_x}")
    k_m = counts[-1]
    if 2 * k_m >= k:
        mover = c_x >= 2 * (k - k_m) + 2
    else:
        mover = c_x >= k + 2
    return Player.MOVER if mover else Player.DEFENDER


def gin_g_witness(s: int, t: int) -> Configuration:
    """
    A Defender-win configuration of size eta_gst_formula(s, t) - 1

    Canonical labeling (root, T, S). One T vertex stays empty and t - 2
    hold one pebble each. For s even the last T vertex holds 2s + 5 and S
    is empty. For s odd the last T vertex holds 2s + 3 and the first S
    vertex one pebble.
    """
    eta_gst_formula(s, t)
    t_counts = [0] + [1] * (t - 2)
    if s % 2 == 0:
        t_counts.append(2 * s + 5)
        s_counts = [0] * s
    else:
        t_counts.append(2 * s + 3)
        s_counts = [1] + [0] * (s - 1)
    return tuple([0] + t_counts + s_counts)


def is_boundary(descriptor: GstDescriptor, config: Configuration) -> bool:
    return view(descriptor, config).is_boundary
