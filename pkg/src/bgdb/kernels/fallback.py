"""Pure-numpy convolution patch kernels.

Reference implementation for the compiled extension in ``_convcore.pyx``.
Both backends accumulate contributions in the same (kernel-row, kernel-col)
order, so their outputs are bit-identical.
"""

import numpy as np

BACKEND = "python"


def conv_out_size(size: int, k: int, stride: int, padding: int) -> int:
    return (size + 2 * padding - k) // stride + 1


def im2col(x: np.ndarray, kh: int, kw: int, stride: int, padding: int) -> np.ndarray:
    """Gather conv patches: x [N,C,H,W] -> cols [N, C*kh*kw, OH*OW]."""
    n, c, h, w = x.shape
    oh = conv_out_size(h, kh, stride, padding)
    ow = conv_out_size(w, kw, stride, padding)
    if padding:
        xp = np.pad(x, ((0, 0), (0, 0), (padding, padding), (padding, padding)))
    else:
        xp = x
    cols = np.empty((n, c * kh * kw, oh * ow), dtype=np.float64)
    view = cols.reshape(n, c, kh, kw, oh, ow)
    for u in range(kh):
        for v in range(kw):
            view[:, :, u, v] = xp[:, :, u : u + stride * oh : stride, v : v + stride * ow : stride]
    return cols


def col2im(
    cols: np.ndarray,
    n: int,
    c: int,
    h: int,
    w: int,
    kh: int,
    kw: int,
    stride: int,
    padding: int,
) -> np.ndarray:
    """Scatter-add conv patches back: the adjoint of im2col."""
    oh = conv_out_size(h, kh, stride, padding)
    ow = conv_out_size(w, kw, stride, padding)
    xp = np.zeros((n, c, h + 2 * padding, w + 2 * padding), dtype=np.float64)
    view = cols.reshape(n, c, kh, kw, oh, ow)
    for u in range(kh):
        for v in range(kw):
            xp[:, :, u : u + stride * oh : stride, v : v + stride * ow : stride] += view[:, :, u, v]
    if padding:
        return np.ascontiguousarray(xp[:, :, padding : padding + h, padding : padding + w])
    return xp
