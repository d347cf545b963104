#!/usr/bin/env python3
"""Every animation-principle modulation on a single 1-D base motion.

One panel per principle, each with the demonstration dashed and one or
two modulated intensities on top. Coupling panels (secondary action,
follow-through) extend the model with resting dimensions that act as
coupling targets. Trajectory CSVs land next to the figure.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from animdmp import Coupling, Demonstration, ModulationConfig, learn, modulated_rollout, rollout
from animdmp.formats import builtin_robot, trajectory_to_csv
from animdmp.synth import feature_demo

OUT = Path(__file__).parent / "output"


def main():
    OUT.mkdir(exist_ok=True)
    demo = feature_demo()
    model = learn(demo, 30)

    # Coupling targets: the feature motion on dim 1, resting dims around it.
    n = demo.n_steps
    demo4 = Demonstration(dt=demo.dt, positions=np.column_stack([
        np.full(n, 0.2), demo.positions[:, 0], np.full(n, 0.1), np.full(n, 0.3)]))
    model4 = learn(demo4, 30)
    arm = builtin_robot("arm_7dof")

    panels = [
        ("arc", model, [("broader p_arc=5", ModulationConfig(p_arc=5.0)),
                        ("sharper p_arc=-5", ModulationConfig(p_arc=-5.0))], 0),
        ("anticipation", model,
         [("p_ant=0.4", ModulationConfig(p_ant=0.4, t_ant=0.1 * model.tau))], 0),
        ("time_scaling", model,
         [("p_time=0.75", ModulationConfig(p_time=0.75)),
          ("p_time=1.25", ModulationConfig(p_time=1.25))], 0),
        ("progression", model,
         [("slow-in/slow-out k=8", ModulationConfig(slow_k=8.0)),
          ("slow->fast sectors", ModulationConfig(
              timing_sectors=((0.5, 0.6), (0.5, 1.4)))),
          ("fast->slow sectors", ModulationConfig(
              timing_sectors=((0.5, 1.4), (0.5, 0.6))))], 0),
        ("exaggeration", model,
         [("p_exa=1.5", ModulationConfig(p_exa=1.5)),
          ("p_exa=0.5", ModulationConfig(p_exa=0.5)),
          ("p_exa=0", ModulationConfig(p_exa=0.0))], 0),
        ("secondary_action", model4,
         [("p_sec=0.05 into dim 0", ModulationConfig(
             p_sec=0.05, sec_couplings=(Coupling(1, 0),)))], 0),
        ("follow_through", model4,
         [("p_follow=3.0 into dim 3", ModulationConfig(
             p_follow=3.0, follow_couplings=(Coupling(1, 3),)))], 3),
        ("randomization", model,
         [(f"p_rand=0.5 seed={s}", ModulationConfig(p_rand=0.5, seed=s))
          for s in (1, 2, 3)], 0),
    ]

    fig, axes = plt.subplots(4, 2, figsize=(11, 13))
    for ax, (name, m, variants, plot_dim) in zip(axes.flat, panels):
        base = rollout(m)
        if m.n_dims == 1:
            ax.plot(demo.times(), demo.positions[:, 0], "k--", lw=1.5,
                    label="demonstration")
        else:
            ax.plot(base.times(), base.positions[:, plot_dim], "k--", lw=1.5,
                    label="unmodulated")
        for label, cfg in variants:
            robot = arm if cfg.p_follow > 0 else None
            traj = modulated_rollout(m, cfg, robot=robot)
            ax.plot(traj.times(), traj.positions[:, plot_dim], label=label)
            slug = label.split()[0].replace("=", "_").replace("/", "-").replace("->", "-")
            (OUT / f"{name}_{slug}.csv").write_text(trajectory_to_csv(traj))
        ax.set_title(name)
        ax.set_xlabel("time [s]")
        ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(OUT / "principles_1d.png", dpi=120)
    print(f"wrote {OUT / 'principles_1d.png'} and per-variant CSVs")


if __name__ == "__main__":
    main()
