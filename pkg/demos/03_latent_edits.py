"""Edit masks in latent space: generate, perturb, and interpolate parts.

Reuses the checkpoint from demo 02 (run that first, or this script trains
a quick one). Renders land in demos/output/03/.
"""

from pathlib import Path

import numpy as np
import torch
from PIL import Image

from maskvae import load_checkpoint, one_hot_decode, render_color
from maskvae.latent_ops import (
    decode_codes_to_mask,
    encode_mask,
    generate_part,
    interpolation_sweep,
    perturb_part,
)
from maskvae.toydata import ToyMaskConfig, generate_toy_mask

out_dir = Path(__file__).parent / "output" / "03"
out_dir.mkdir(parents=True, exist_ok=True)

ckpt_dir = Path(__file__).parent / "output" / "02" / "run" / "epoch_8"
if not ckpt_dir.exists():
    raise SystemExit("run demos/02_train_and_reconstruct.py first to produce a checkpoint")

ckpt = load_checkpoint(ckpt_dir)
model, palette = ckpt.model, ckpt.palette
toy = ToyMaskConfig(palette.class_count, ckpt.config.mask_size, ckpt.config.mask_size)


def save(mask, name):
    img = render_color(one_hot_decode(mask.channels), palette)
    Image.fromarray(img).resize((256, 256), Image.NEAREST).save(out_dir / f"{name}.png")


source = generate_toy_mask(9001, toy)
target = generate_toy_mask(9002, toy)
codes = encode_mask(model, source)
recon, _ = decode_codes_to_mask(model, codes)
save(source, "source_input")
save(recon, "source_reconstruction")
save(target, "target_input")

hair = palette.index_of("hair")
nose = palette.index_of("nose")

# fresh hair from the prior, three different seeds
for seed in (0, 1, 2):
    g = torch.Generator().manual_seed(seed)
    edited, _ = decode_codes_to_mask(model, generate_part(codes, hair, g))
    save(edited, f"generate_hair_seed{seed}")

# nudge the nose with increasing noise
for scale in (0.2, 0.6, 1.0):
    g = torch.Generator().manual_seed(7)
    edited, _ = decode_codes_to_mask(model, perturb_part(codes, nose, scale, g))
    save(edited, f"perturb_nose_{scale:.1f}")

# sweep the mouth from source to target
sweep = interpolation_sweep(model, source, target, palette.index_of("mouth"), steps=5)
for i, mask in enumerate(sweep):
    save(mask, f"interpolate_mouth_{i}_of_4")

changed = [
    int((np.argmax(m.channels, axis=0) != np.argmax(recon.channels, axis=0)).sum())
    for m in sweep
]
print("mouth interpolation: changed pixels vs reconstruction per step:", changed)
print(f"renders in {out_dir}")
