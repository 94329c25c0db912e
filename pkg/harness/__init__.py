from harness.sweep import SweepReport, Sweeper, run_sweep
from harness.perturb import PerturbReport, run_perturb
