"""The packed vocabulary: disjoint ID ranges, fixed-geometry sequences,
and the masking modes that define the model's task mixture."""

import numpy as np

from tokensplit.util import seeded_rng
from tokensplit.vocab import (
    VocabLayout,
    default_mask_policy,
    no_mask_pattern,
    pack_input,
    pack_target,
    sample_mask_pattern,
    unpack_output,
)

lo = VocabLayout()
print("global id ranges:")
print(f"  specials   [0, {lo.num_special})   PAD/MASK/SEP/EOS")
print(f"  transcript [{lo.transcript_offset}, {lo.semantic_offset})")
print(f"  semantic   [{lo.semantic_offset}, {lo.acoustic_base})")
for q in range(lo.num_stages):
    off = lo.stage_offset(q)
    print(f"  acoustic q={q} [{off}, {off + lo.codebook_size})")
print(f"  total vocabulary: {lo.total_size}")

rng = np.random.default_rng(0)
w1 = rng.integers(0, lo.transcript_size, 20)
w2 = rng.integers(0, lo.transcript_size, 18)
s_mix = rng.integers(0, lo.semantic_size, lo.num_frames)
a_mix = rng.integers(0, lo.codebook_size, (lo.num_frames, lo.num_stages))

seq = pack_input(w1, w2, s_mix, a_mix, no_mask_pattern(), lo)
print(f"\npacked input: {seq.ids.size} ids "
      f"(= 2x{lo.transcript_pad} transcripts + {lo.num_frames} semantic "
      f"+ {lo.num_frames}x{lo.input_stages} acoustic + 3 separators)")

tgt = pack_target(a_mix, a_mix, s_mix, s_mix, w1, w2, lo)
print(f"packed target: {tgt.ids.size} ids, fixed for every example")
back = unpack_output(tgt.ids, lo)
print(f"positional unpack recovers all six streams, violations={back.violations}")

policy = default_mask_policy()
print(f"\nmask policy over input segments (span prob {policy.span_prob}):")
for mode, prob in sorted(policy.mode_probs.items(), key=lambda kv: -kv[1]):
    print(f"  {mode:15s} p={prob:.2f}")
print("ten sampled patterns:")
mask_rng = seeded_rng(4, "demo")
for _ in range(10):
    p = sample_mask_pattern(policy, mask_rng, lo.num_frames)
    masked = ",".join(sorted(p.masked)) or "-"
    spans = {k: v for k, v in p.spans.items()}
    print(f"  mode={p.mode:15s} masked=[{masked}] spans={spans}")
