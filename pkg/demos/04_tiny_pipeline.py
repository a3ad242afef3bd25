"""End-to-end pipeline at toy scale, through the caching harness.

Generates data, trains the codec, tokenizer, separation model and the
refinement model, evaluates, and shows that rerunning skips every cached
stage. Takes a few seconds; the desk-scale equivalent is
scripts/run_acceptance_experiment.py.
"""

import json
import tempfile
import time

from tokensplit.config import tiny_test_config
from tokensplit.harness import Run, compare_runs

run_dir = tempfile.mkdtemp(prefix="tokensplit_demo_")
cfg = tiny_test_config(count=24)

print(f"running the pipeline into {run_dir}")
t0 = time.time()
run = Run(cfg, run_dir)
manifest = run.execute()
print(f"first pass: {time.time() - t0:.1f}s")
for name, entry in manifest["stages"].items():
    print(f"  {name:14s} {entry['status']}")

print("\nheld-out metrics (tiny model, so numbers are weak):")
for key, val in sorted(manifest["metrics"].items()):
    print(f"  {key:32s} {val:8.3f}")

t0 = time.time()
manifest = Run(cfg, run_dir).execute()
print(f"\nsecond pass: {time.time() - t0:.1f}s (content-addressed cache)")
for name, entry in manifest["stages"].items():
    print(f"  {name:14s} {entry['status']}")

print("\ncomparing the run against itself:")
report = compare_runs(run_dir, run_dir)
print(json.dumps(report, indent=1)[:200], "...")
