#!/usr/bin/env python3
"""Online goal adaptation: retarget a running motion without restarting.

The attractor's goal can be swapped at any integration step; position
and velocity stay continuous and the system converges to the new target
while keeping the learned shape of the gesture.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from animdmp import Rollout, RolloutOptions, learn, rollout
from animdmp.synth import feature_demo

OUT = Path(__file__).parent / "output"


def main():
    OUT.mkdir(exist_ok=True)
    demo = feature_demo()
    model = learn(demo, 30)

    fig, ax = plt.subplots(figsize=(7, 4))
    plain = rollout(model, RolloutOptions(settle_steps=100))
    ax.plot(plain.times(), plain.positions[:, 0], "k--",
            label=f"original goal {model.goal[0]:.2f}")

    for frac, new_goal in ((0.3, 1.4), (0.6, 0.2)):
        r = Rollout(model, RolloutOptions(settle_steps=100))
        switch_at = int(frac * model.tau / model.dt)
        for _ in range(switch_at):
            r.step()
        r.set_goal([new_goal])
        traj = r.run()
        final = traj.positions[-1, 0]
        print(f"switch at {frac:.0%} of tau -> goal {new_goal}: "
              f"settled at {final:.4f}")
        ax.plot(traj.times(), traj.positions[:, 0],
                label=f"switch@{frac:.0%} to {new_goal}")
        ax.axvline(switch_at * model.dt, color="gray", lw=0.5)

    ax.set_xlabel("time [s]")
    ax.set_ylabel("position")
    ax.legend()
    fig.tight_layout()
    fig.savefig(OUT / "goal_adaptation.png", dpi=120)
    print(f"wrote {OUT / 'goal_adaptation.png'}")


if __name__ == "__main__":
    main()
