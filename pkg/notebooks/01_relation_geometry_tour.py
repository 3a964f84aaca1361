"""
A tour of the relation geometry
===============================

From two boxes to the nonnegative weight that biases one query's attention
toward another. Run with ``python notebooks/01_relation_geometry_tour.py``.
"""

# %%
import numpy as np

from lpdetr.geometry import BBox, giou, iou, multi_scale_metric, relation_metric, sinusoidal_embed
from lpdetr.relation_attention import (
    effective_scale_weights, geometric_weight_from_boxes, init_attention_params, init_scale_logits,
    relation_attention_layer,
)

np.set_printoptions(precision=4, suppress=True)

# %% [markdown]
# Boxes are (cx, cy, w, h). GIoU is IoU minus the share of the enclosing box
# that neither box covers, so it keeps a gradient when boxes do not overlap.

# %%
big, small, far = BBox(0.5, 0.5, 1, 1), BBox(0.5, 0.5, 0.5, 0.5), BBox(10.5, 0.5, 1, 1)
print("nested  iou", iou(big, small), "giou", giou(big, small))
print("distant iou", iou(big, far), "giou", round(giou(big, far), 4))

# %% [markdown]
# The relation metric is a 5-vector: log offsets (guarded at 1e-3), log size
# ratios and GIoU. Deeper layers damp the log terms through the medium scale.

# %%
qi, qj = BBox(0.3, 0.3, 0.2, 0.2), BBox(0.6, 0.4, 0.1, 0.3)
print("local metric", relation_metric(qi, qj))
stacked = np.stack([multi_scale_metric(qi, qj, layer, 6) for layer in (1, 6)])
print("layer 1 local|medium|global\n", stacked[0].reshape(3, 5))
print("layer 6 local|medium|global\n", stacked[1].reshape(3, 5))

emb = sinusoidal_embed(stacked[0])
print("embedding width", emb.shape[-1])

# %% [markdown]
# The scale gates Λ start at one third each. Geometric weights for every query
# pair come from a small ReLU MLP on the gated embedding.

# %%
rng = np.random.default_rng(0)
params = {k: v.data for k, v in init_attention_params(rng, 16, 8).items()}
lam = effective_scale_weights(init_scale_logits(6).data).data
print("initial Λ rows\n", lam)

boxes = np.array([[0.2, 0.2, 0.1, 0.1], [0.25, 0.22, 0.1, 0.12], [0.8, 0.7, 0.3, 0.2]])
geo = geometric_weight_from_boxes(boxes, 1, 6, lam[0], params).data
print("head 0 geometric weights\n", geo[0])

# %% [markdown]
# With constant geometry per row the geometric softmax collapses to ordinary
# attention. With zero relation heads the layer is ordinary attention.

# %%
x = rng.normal(size=(3, 16))
flat = np.ones((8, 3, 3)) * 2.5
plain = relation_attention_layer(x, None, params, 8, 0).data
gap = np.abs(relation_attention_layer(x, flat, params, 8, 8).data - plain).max()
print("constant geometry vs plain attention, max gap", gap)
print("with real geometry, max change", np.abs(relation_attention_layer(x, geo, params, 8, 8).data - plain).max())
