#!/usr/bin/env python3
"""Coupling validation on the shipped robot configs.

Follow-through couplings must run down one kinematic chain with nearly
parallel rotation axes; everything else is rejected with a named rule.
Secondary-action couplings are free design choices and only need valid
indices.
"""

from animdmp import Coupling, validate_follow_coupling, validate_secondary_coupling
from animdmp.formats import builtin_robot, builtin_robot_names


def main():
    print("shipped robots:", ", ".join(builtin_robot_names()))
    humanoid = builtin_robot("humanoid_17dof")
    by_dim = {j.dim_index: j.name for j in humanoid.joints}

    candidates = [
        Coupling(6, 8),    # shoulder roll -> elbow roll, same chain + axis
        Coupling(5, 6),    # shoulder pitch -> shoulder roll, axes differ
        Coupling(6, 12),   # left arm -> right arm, disjoint chains
        Coupling(8, 6),    # child -> parent, against the hierarchy
    ]
    print("\nfollow-through validation (humanoid_17dof):")
    for c in candidates:
        verdict = validate_follow_coupling(humanoid, c)
        pair = f"{by_dim[c.source]} -> {by_dim[c.target]}"
        if verdict is None:
            print(f"  ok         {pair}")
        else:
            print(f"  {verdict.rule:10s} {pair}: {verdict.message}")

    print("\nsecondary-action validation (head_1dof + humanoid):")
    head = builtin_robot("head_1dof")
    print("  humanoid 6 -> 0:",
          validate_secondary_coupling(humanoid, Coupling(6, 0)) or "ok")
    try:
        validate_secondary_coupling(head, Coupling(0, 3))
    except Exception as e:
        print(f"  head 0 -> 3: rejected ({e})")


if __name__ == "__main__":
    main()
