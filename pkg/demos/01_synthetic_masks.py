"""Generate a batch of synthetic face-layout masks and render them.

Writes color renders plus a coverage summary to demos/output/01/.
"""

from pathlib import Path

import numpy as np
from PIL import Image

from maskvae import compute_class_weights, compute_dataset_stats, one_hot_decode, render_color
from maskvae.toydata import ToyMaskConfig, make_toy_dataset

out_dir = Path(__file__).parent / "output" / "01"
out_dir.mkdir(parents=True, exist_ok=True)

config = ToyMaskConfig(class_count=6, height=64, width=64)
palette = config.palette()
masks = make_toy_dataset(16, base_seed=0, config=config)

for i, mask in enumerate(masks):
    img = render_color(one_hot_decode(mask.channels), palette)
    Image.fromarray(img).resize((256, 256), Image.NEAREST).save(out_dir / f"mask_{i:02d}.png")

stats = compute_dataset_stats(masks)
weights = compute_class_weights(stats)
print(f"{len(masks)} masks, {config.class_count} classes")
print(f"{'class':<12}{'coverage':>10}{'weight':>10}")
for entry, cov, w in zip(palette.entries, stats.per_class_mean_coverage, weights.w):
    print(f"{entry.name:<12}{cov:>10.4f}{w:>10.4f}")
print(f"coverages sum to {stats.per_class_mean_coverage.sum():.9f}")
print(f"renders in {out_dir}")
