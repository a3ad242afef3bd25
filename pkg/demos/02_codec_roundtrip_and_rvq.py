"""The acoustic frame codec: lossless lapped transform, lossy token stage.

With the full coefficient set the analysis/synthesis pair reconstructs
exactly; residual vector quantization then trades fidelity for a small
discrete code, and reconstruction improves monotonically with the number
of decoded stages.
"""

import numpy as np

from tokensplit import codec as tscodec
from tokensplit.codec import CodecConfig
from tokensplit.metrics import si_snr
from tokensplit.synthdata import DataConfig, default_alphabet, generate_example, speaker_pool

cfg = CodecConfig(max_train_frames=12000)
data_cfg = DataConfig(count=0)
pool = speaker_pool(data_cfg, seed=3)
alphabet = default_alphabet(data_cfg.alphabet_size)

print(f"frame geometry: hop {cfg.hop} samples, window {cfg.window_len}, "
      f"{cfg.frame_rate_hz} Hz frame rate")

ex = generate_example(DataConfig(count=1), pool, alphabet, seed=3, index=0)
feats = tscodec.analyze(ex.mixture, cfg)
print(f"3 s block -> {feats.num_frames} frames of dim {feats.frames.shape[1]}")

back = tscodec.synthesize(feats, cfg)
err = np.max(np.abs(back.samples - ex.mixture.samples))
print(f"full-dimension round trip: max abs error {err:.2e}")

print("\ntraining the residual quantizer on a small corpus...")
frames = []
for i in range(40):
    e = generate_example(DataConfig(count=1), pool, alphabet, seed=3, index=i)
    frames.append(tscodec.analyze(e.mixture, cfg).frames)
    for s, g in zip(e.sources, e.gains_db):
        scaled = 10 ** (g / 20) * s.samples
        frames.append(tscodec.analyze(scaled, cfg).frames)
corpus = np.concatenate(frames)
books = tscodec.train_rvq(corpus, cfg, seed=11)
print(f"  {books.num_stages} stages x {cfg.codebook_size} codewords; "
      f"mean residual energy per stage: "
      + ", ".join(f"{e:.3f}" for e in books.stats["stage_mean_energy"]))

target = 10 ** (ex.gains_db[0] / 20) * ex.sources[0].samples
tokens = tscodec.encode_waveform(target, cfg, books)
print(f"\nacoustic tokens: shape {tokens.shape} (frames x stages), "
      f"values in [0, {cfg.codebook_size})")
print("reconstruction quality by decode depth:")
for level in range(1, books.num_stages + 1):
    rec = tscodec.tokens_to_waveform(tokens, cfg, books, level)
    print(f"  levels <= {level}: SI-SNR {si_snr(rec.samples, target):6.2f} dB")
