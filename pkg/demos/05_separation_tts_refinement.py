"""The three inference modes plus refinement and overlap decoding.

Uses the desk-scale run under runs/acceptance when it exists (build it
with scripts/run_acceptance_experiment.py); otherwise falls back to a
freshly built toy run, where output quality is nominal but every code
path is exercised.
"""

import os
import tempfile

import numpy as np

from tokensplit.config import tiny_test_config
from tokensplit.harness import Run, run_experiment
from tokensplit.inference import SamplingConfig, overlap_decode, separate, tts
from tokensplit.metrics import eval_permutation, si_snr, si_snri
from tokensplit.refine import baseline_separate, refine
from tokensplit.synthdata import (
    Waveform,
    load_example,
    load_manifest,
    scaled_sources,
)
from tokensplit.training import load_checkpoint

accept = os.path.join(os.path.dirname(__file__), "..", "runs", "acceptance")
if os.path.exists(os.path.join(accept, "metrics.csv")):
    run_dir = accept
    from tokensplit.config import desk_config

    cfg = desk_config()
    print(f"using the desk-scale run in {run_dir}")
else:
    run_dir = tempfile.mkdtemp(prefix="tokensplit_demo_")
    cfg = tiny_test_config(count=24)
    print(f"no desk run found; building a toy run in {run_dir}")
    run_experiment(cfg, run_dir)

run = Run(cfg, run_dir)
codecs = run.load_codecs()
ck = load_checkpoint(run.path("checkpoint.tsck"))
manifest = load_manifest(run.dataset_dir)
idx = len(manifest["examples"]) - 1  # held out from training
ex = load_example(run.dataset_dir, manifest, idx)
refs = scaled_sources(ex)

print("\n--- mode 1: separation and recognition (no transcripts) ---")
sampling = SamplingConfig(temperature=0.0, first_token_temperature=1.0, seed=4)
res = separate(ex.mixture, None, ck.params, ck.model_config, codecs, sampling)
perm = eval_permutation([w.samples for w in res.waveforms],
                        [r.samples for r in refs], si_snr, "max")
for s in range(2):
    ref = refs[perm.assignment[s]]
    print(f"  source {s}: SI-SNRi "
          f"{perm.per_source[s] - si_snr(ex.mixture.samples, ref.samples):6.2f} dB, "
          f"decoded transcript {res.transcripts[s]}")
print(f"  true transcripts: {ex.transcripts}")

print("\n--- mode 2: transcript-conditioned separation ---")
res_c = separate(ex.mixture, [ex.transcripts[0], None], ck.params,
                 ck.model_config, codecs, sampling)
print(f"  conditioned on source-0 text; decoded transcripts {res_c.transcripts}")

print("\n--- mode 3: two-speaker TTS from transcripts alone ---")
res_t = tts(ex.transcripts, ck.params, ck.model_config,
            codecs, SamplingConfig(temperature=0.8, seed=9))
for s, w in enumerate(res_t.waveforms):
    print(f"  generated source {s}: {len(w)} samples, peak {np.abs(w.samples).max():.3f}")

print("\n--- refinement of a conventional separator's output ---")
baseline = baseline_separate(ex)
refine_ck = load_checkpoint(run.path("refine.tsck"))
for s in range(2):
    out = refine(baseline[s], ex.mixture, None, refine_ck.params,
                 refine_ck.model_config, codecs, SamplingConfig(seed=s))
    print(f"  source {s}: baseline SI-SNR {si_snr(baseline[s].samples, refs[s].samples):6.2f} dB"
          f" -> refined {si_snr(out.waveform.samples, refs[s].samples):6.2f} dB")

print("\n--- partial overlap decoding on a longer mixture ---")
double = Waveform(
    np.concatenate([ex.mixture.samples, ex.mixture.samples[: len(ex.mixture) // 2]]),
    ex.mixture.sample_rate_hz,
)
overlap_s = cfg.layout.num_frames / cfg.codec.frame_rate_hz / 3.0
res_o = overlap_decode(double, ck.params, ck.model_config, codecs, sampling,
                       overlap_seconds=overlap_s)
print(f"  {len(double)} samples -> {res_o.num_blocks} blocks; "
      f"stitched outputs {len(res_o.waveforms[0])} samples each; "
      f"per-block transcripts: {len(res_o.block_transcripts)}")
