"""Train a small mask autoencoder and inspect its reconstructions.

A few minutes on CPU. Checkpoints, metrics CSV, and side-by-side
input/reconstruction renders land in demos/output/02/.
"""

from pathlib import Path

import numpy as np
from PIL import Image

from maskvae import (
    ModelConfig,
    TrainConfig,
    LossConfig,
    build_model,
    compute_class_weights,
    compute_dataset_stats,
    evaluate,
    one_hot_decode,
    render_color,
    split_train_test,
    train,
)
from maskvae.model import masks_to_batch
from maskvae.toydata import ToyMaskConfig, make_toy_dataset

out_dir = Path(__file__).parent / "output" / "02"
out_dir.mkdir(parents=True, exist_ok=True)

toy = ToyMaskConfig(class_count=6, height=64, width=64)
palette = toy.palette()
masks = make_toy_dataset(550, base_seed=0, config=toy)
train_masks, test_masks = split_train_test(masks, test_fraction=1 / 11, seed=0)
weights = compute_class_weights(compute_dataset_stats(train_masks))

config = ModelConfig(class_count=6, mask_size=64, decoder_base_channels=32)
model = build_model(config, seed=0)
report = train(
    model,
    train_masks,
    TrainConfig(epochs=8, seed=0),
    LossConfig(class_weights=weights),
    eval_masks=test_masks,
    out_dir=out_dir / "run",
    palette=palette,
    log_fn=print,
)

metrics = report.final_metrics
print(f"\nheld-out acc={metrics.pixel_accuracy:.4f} miou={metrics.mean_iou:.4f}")
for entry, iou in zip(palette.entries, metrics.per_class_iou):
    print(f"  iou[{entry.name}] = {iou:.4f}")

import torch

with torch.no_grad():
    logits, _ = model(masks_to_batch(test_masks[:6]), sample=False)
for i in range(6):
    gt = render_color(one_hot_decode(test_masks[i].channels), palette)
    pred = render_color(one_hot_decode(logits[i].numpy()), palette)
    pair = np.concatenate([gt, np.full((64, 4, 3), 255, dtype=np.uint8), pred], axis=1)
    Image.fromarray(pair).resize((1056, 512), Image.NEAREST).save(out_dir / f"recon_{i}.png")
print(f"side-by-side renders in {out_dir}")
