#!/usr/bin/env python3
"""Learn motion primitives from demonstrations and reproduce them.

Trains models on a minimum-jerk reach and on a feature-rich 1-D motion,
shows how reconstruction quality improves with the basis count, and
plots the reproduced trajectories over the demonstrations (dashed).
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from animdmp import RolloutOptions, learn, rollout
from animdmp.synth import feature_demo, min_jerk_demo

OUT = Path(__file__).parent / "output"


def reconstruction_rmse(model, demo):
    traj = rollout(model, RolloutOptions(steps=demo.n_steps - 1, settle_steps=0))
    return np.sqrt(np.mean((traj.positions - demo.positions) ** 2))


def main():
    OUT.mkdir(exist_ok=True)
    demos = {"min_jerk": min_jerk_demo(), "feature_rich": feature_demo()}

    print("Reconstruction RMSE by basis count")
    print(f"{'demo':>14s} {'N_w=10':>10s} {'N_w=30':>10s} {'N_w=100':>10s}")
    for name, demo in demos.items():
        rmses = [reconstruction_rmse(learn(demo, n), demo) for n in (10, 30, 100)]
        print(f"{name:>14s} " + " ".join(f"{r:10.2e}" for r in rmses))

    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    for ax, (name, demo) in zip(axes, demos.items()):
        model = learn(demo, 30)
        traj = rollout(model, RolloutOptions(settle_steps=0))
        ax.plot(demo.times(), demo.positions[:, 0], "k--", label="demonstration")
        ax.plot(traj.times(), traj.positions[:, 0], "C0", label="reproduction")
        ax.set_title(f"{name} (N_w=30)")
        ax.set_xlabel("time [s]")
        ax.set_ylabel("position")
        ax.legend()
    fig.tight_layout()
    fig.savefig(OUT / "learn_and_reproduce.png", dpi=120)
    print(f"wrote {OUT / 'learn_and_reproduce.png'}")


if __name__ == "__main__":
    main()
