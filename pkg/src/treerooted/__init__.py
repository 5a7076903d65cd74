"""Tree-rooted planar maps and their bijections with pairs of Catalan objects."""

from .catalan import (
    B1,
    TAU,
    Leaf,
    Node,
    NonCrossingPartition,
    PlaneTree,
    big_theta,
    theta,
    upsilon,
    upsilon_inv,
)
from .cdv import TreeSequence, lambda0, lambda0_prime, lambda1, lambda1_prime, lambda_, lambda_inv, sigma, sigma_inv
from .explosion import big_phi, big_phi_inv, phi, psi
from .orientation import delta, gamma, is_tree_orientation
from .planar_map import OrientedMap, RootedMap, TreeRootedMap
from .walsh_lehman import xi, xi_inv
from .words import WordClass, classify, is_paren_shuffle, is_prefix_shuffle

__all__ = [
    "B1", "TAU", "Leaf", "Node", "NonCrossingPartition", "PlaneTree", "big_theta", "theta",
    "upsilon", "upsilon_inv", "TreeSequence", "lambda0", "lambda0_prime", "lambda1",
    "lambda1_prime", "lambda_", "lambda_inv", "sigma", "sigma_inv", "big_phi", "big_phi_inv",
    "phi", "psi", "delta", "gamma", "is_tree_orientation", "OrientedMap", "RootedMap",
    "TreeRootedMap", "xi", "xi_inv", "WordClass", "classify", "is_paren_shuffle",
    "is_prefix_shuffle",
]
