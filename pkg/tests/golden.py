"""Reference reachability matrices for 4 qubits under full connectivity.

Integer matrices are exact path counts for {X, CCX}; the {H, T, CX} values
are summed Z-basis probabilities printed to one decimal place.
"""

import numpy as np

R0_XCCX = np.array([
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
], dtype=np.int64)

R1_XCCX = np.array([
    [24, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 24, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 24, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 1, 20, 0, 0, 0, 3, 0, 0, 0, 3, 0, 0, 0, 0],
    [1, 0, 0, 0, 24, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 1, 20, 0, 3, 0, 0, 0, 0, 0, 3, 0, 0],
    [0, 0, 1, 0, 1, 0, 20, 3, 0, 0, 0, 0, 0, 0, 3, 0],
    [0, 0, 0, 3, 0, 3, 3, 12, 0, 0, 0, 0, 0, 0, 0, 7],
    [1, 0, 0, 0, 0, 0, 0, 0, 24, 1, 1, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 1, 20, 0, 3, 0, 3, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 20, 3, 0, 0, 3, 0],
    [0, 0, 0, 3, 0, 0, 0, 0, 0, 3, 3, 12, 0, 0, 0, 7],
    [0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 20, 3, 3, 0],
    [0, 0, 0, 0, 0, 3, 0, 0, 0, 3, 0, 0, 3, 12, 0, 7],
    [0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 3, 0, 3, 0, 12, 7],
    [0, 0, 0, 0, 0, 0, 0, 7, 0, 0, 0, 7, 0, 7, 7, 0],
], dtype=np.int64)

R2_XCCX = np.array([
    [580, 48, 48, 2, 48, 2, 2, 0, 48, 2, 2, 0, 2, 0, 0, 0],
    [48, 580, 2, 44, 2, 44, 0, 6, 2, 44, 0, 6, 0, 6, 0, 0],
    [48, 2, 580, 44, 2, 0, 44, 6, 2, 0, 44, 6, 0, 0, 6, 0],
    [2, 44, 44, 420, 0, 10, 10, 96, 0, 10, 10, 96, 0, 0, 0, 42],
    [48, 2, 2, 0, 580, 44, 44, 6, 2, 0, 0, 0, 44, 6, 6, 0],
    [2, 44, 0, 10, 44, 420, 10, 96, 0, 10, 0, 0, 10, 96, 0, 42],
    [2, 0, 44, 10, 44, 10, 420, 96, 0, 0, 10, 0, 10, 0, 96, 42],
    [0, 6, 6, 96, 6, 96, 96, 220, 0, 0, 0, 58, 0, 58, 58, 84],
    [48, 2, 2, 0, 2, 0, 0, 0, 580, 44, 44, 6, 44, 6, 6, 0],
    [2, 44, 0, 10, 0, 10, 0, 0, 44, 420, 10, 96, 10, 96, 0, 42],
    [2, 0, 44, 10, 0, 0, 10, 0, 44, 10, 420, 96, 10, 0, 96, 42],
    [0, 6, 6, 96, 0, 0, 0, 58, 6, 96, 96, 220, 0, 58, 58, 84],
    [2, 0, 0, 0, 44, 10, 10, 0, 44, 10, 10, 0, 420, 96, 96, 42],
    [0, 6, 0, 0, 6, 96, 0, 58, 6, 96, 0, 58, 96, 220, 58, 84],
    [0, 0, 6, 0, 6, 0, 96, 58, 6, 0, 96, 58, 96, 58, 220, 84],
    [0, 0, 0, 42, 0, 42, 42, 84, 0, 42, 42, 84, 42, 84, 84, 196],
], dtype=np.int64)

R3_XCCX = np.array([
    [14112, 1738, 1738, 136, 1738, 136, 136, 18, 1738, 136, 136, 18, 136, 18, 18, 0],
    [1738, 14100, 140, 1498, 140, 1498, 22, 336, 140, 1498, 22, 336, 22, 336, 0, 126],
    [1738, 140, 14100, 1498, 140, 22, 1498, 336, 140, 22, 1498, 336, 22, 0, 336, 126],
    [136, 1498, 1498, 9064, 22, 532, 532, 2766, 22, 532, 532, 2766, 0, 354, 354, 1344],
    [1738, 140, 140, 22, 14100, 1498, 1498, 336, 140, 22, 22, 0, 1498, 336, 336, 126],
    [136, 1498, 22, 532, 1498, 9064, 532, 2766, 22, 532, 0, 354, 532, 2766, 354, 1344],
    [136, 22, 1498, 532, 1498, 532, 9064, 2766, 22, 0, 532, 354, 532, 354, 2766, 1344],
    [18, 336, 336, 2766, 336, 2766, 2766, 4092, 0, 354, 354, 1572, 354, 1572, 1572, 2758],
    [1738, 140, 140, 22, 140, 22, 22, 0, 14100, 1498, 1498, 336, 1498, 336, 336, 126],
    [136, 1498, 22, 532, 22, 532, 0, 354, 1498, 9064, 532, 2766, 532, 2766, 354, 1344],
    [136, 22, 1498, 532, 22, 0, 532, 354, 1498, 532, 9064, 2766, 532, 354, 2766, 1344],
    [18, 336, 336, 2766, 0, 354, 354, 1572, 336, 2766, 2766, 4092, 354, 1572, 1572, 2758],
    [136, 22, 22, 0, 1498, 532, 532, 354, 1498, 532, 532, 354, 9064, 2766, 2766, 1344],
    [18, 336, 0, 354, 336, 2766, 354, 1572, 336, 2766, 354, 1572, 2766, 4092, 1572, 2758],
    [18, 0, 336, 354, 336, 354, 2766, 1572, 336, 354, 2766, 1572, 2766, 1572, 4092, 2758],
    [0, 126, 126, 1344, 126, 1344, 1344, 2758, 126, 1344, 1344, 2758, 1344, 2758, 2758, 2352],
], dtype=np.int64)

R1_HTCX = np.array([
    [18.0, 0.5, 0.5, 0.0, 0.5, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.5, 15.0, 0.0, 1.5, 0.0, 1.5, 0.0, 0.0, 0.0, 1.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.5, 0.0, 15.0, 1.5, 0.0, 0.0, 1.5, 0.0, 0.0, 0.0, 1.5, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 1.5, 1.5, 12.0, 0.0, 0.0, 0.0, 2.5, 0.0, 0.0, 0.0, 2.5, 0.0, 0.0, 0.0, 0.0],
    [0.5, 0.0, 0.0, 0.0, 15.0, 1.5, 1.5, 0.0, 0.0, 0.0, 0.0, 0.0, 1.5, 0.0, 0.0, 0.0],
    [0.0, 1.5, 0.0, 0.0, 1.5, 12.0, 0.0, 2.5, 0.0, 0.0, 0.0, 0.0, 0.0, 2.5, 0.0, 0.0],
    [0.0, 0.0, 1.5, 0.0, 1.5, 0.0, 12.0, 2.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2.5, 0.0],
    [0.0, 0.0, 0.0, 2.5, 0.0, 2.5, 2.5, 9.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3.5],
    [0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 15.0, 1.5, 1.5, 0.0, 1.5, 0.0, 0.0, 0.0],
    [0.0, 1.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.5, 12.0, 0.0, 2.5, 0.0, 2.5, 0.0, 0.0],
    [0.0, 0.0, 1.5, 0.0, 0.0, 0.0, 0.0, 0.0, 1.5, 0.0, 12.0, 2.5, 0.0, 0.0, 2.5, 0.0],
    [0.0, 0.0, 0.0, 2.5, 0.0, 0.0, 0.0, 0.0, 0.0, 2.5, 2.5, 9.0, 0.0, 0.0, 0.0, 3.5],
    [0.0, 0.0, 0.0, 0.0, 1.5, 0.0, 0.0, 0.0, 1.5, 0.0, 0.0, 0.0, 12.0, 2.5, 2.5, 0.0],
    [0.0, 0.0, 0.0, 0.0, 0.0, 2.5, 0.0, 0.0, 0.0, 2.5, 0.0, 0.0, 2.5, 9.0, 0.0, 3.5],
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2.5, 0.0, 0.0, 0.0, 2.5, 0.0, 2.5, 0.0, 9.0, 3.5],
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3.5, 0.0, 0.0, 0.0, 3.5, 0.0, 3.5, 3.5, 6.0],
], dtype=np.float64)

R2_HTCX = np.array([
    [327.0, 16.0, 16.0, 1.5, 16.0, 1.5, 1.5, 0.0, 16.0, 1.5, 1.5, 0.0, 1.5, 0.0, 0.0, 0.0],
    [16.0, 234.0, 2.5, 40.0, 2.5, 40.0, 0.0, 7.5, 2.5, 40.0, 0.0, 7.5, 0.0, 7.5, 0.0, 0.0],
    [16.0, 2.5, 234.0, 40.0, 2.5, 0.0, 40.0, 7.5, 2.5, 0.0, 40.0, 7.5, 0.0, 0.0, 7.5, 0.0],
    [1.5, 40.0, 40.0, 163.0, 0.0, 8.5, 8.5, 52.0, 0.0, 8.5, 8.5, 52.0, 0.0, 0.0, 0.0, 17.5],
    [16.0, 2.5, 2.5, 0.0, 234.0, 40.0, 40.0, 7.5, 2.5, 0.0, 0.0, 0.0, 40.0, 7.5, 7.5, 0.0],
    [1.5, 40.0, 0.0, 8.5, 40.0, 163.0, 8.5, 52.0, 0.0, 8.5, 0.0, 0.0, 8.5, 52.0, 0.0, 17.5],
    [1.5, 0.0, 40.0, 8.5, 40.0, 8.5, 163.0, 52.0, 0.0, 0.0, 8.5, 0.0, 8.5, 0.0, 52.0, 17.5],
    [0.0, 7.5, 7.5, 52.0, 7.5, 52.0, 52.0, 114.0, 0.0, 0.0, 0.0, 18.5, 0.0, 18.5, 18.5, 52.0],
    [16.0, 2.5, 2.5, 0.0, 2.5, 0.0, 0.0, 0.0, 234.0, 40.0, 40.0, 7.5, 40.0, 7.5, 7.5, 0.0],
    [1.5, 40.0, 0.0, 8.5, 0.0, 8.5, 0.0, 0.0, 40.0, 163.0, 8.5, 52.0, 8.5, 52.0, 0.0, 17.5],
    [1.5, 0.0, 40.0, 8.5, 0.0, 0.0, 8.5, 0.0, 40.0, 8.5, 163.0, 52.0, 8.5, 0.0, 52.0, 17.5],
    [0.0, 7.5, 7.5, 52.0, 0.0, 0.0, 0.0, 18.5, 7.5, 52.0, 52.0, 114.0, 0.0, 18.5, 18.5, 52.0],
    [1.5, 0.0, 0.0, 0.0, 40.0, 8.5, 8.5, 0.0, 40.0, 8.5, 8.5, 0.0, 163.0, 52.0, 52.0, 17.5],
    [0.0, 7.5, 0.0, 0.0, 7.5, 52.0, 0.0, 18.5, 7.5, 52.0, 0.0, 18.5, 52.0, 114.0, 18.5, 52.0],
    [0.0, 0.0, 7.5, 0.0, 7.5, 0.0, 52.0, 18.5, 7.5, 0.0, 52.0, 18.5, 52.0, 18.5, 114.0, 52.0],
    [0.0, 0.0, 0.0, 17.5, 0.0, 17.5, 17.5, 52.0, 0.0, 17.5, 17.5, 52.0, 17.5, 52.0, 52.0, 87.0],
], dtype=np.float64)

R1_HTCX_SQUARED = np.array([
    [325.0, 16.5, 16.5, 1.5, 16.5, 1.5, 1.5, 0.0, 16.5, 1.5, 1.5, 0.0, 1.5, 0.0, 0.0, 0.0],
    [16.5, 232.0, 2.5, 40.5, 2.5, 40.5, 0.0, 7.5, 2.5, 40.5, 0.0, 7.5, 0.0, 7.5, 0.0, 0.0],
    [16.5, 2.5, 232.0, 40.5, 2.5, 0.0, 40.5, 7.5, 2.5, 0.0, 40.5, 7.5, 0.0, 0.0, 7.5, 0.0],
    [1.5, 40.5, 40.5, 161.0, 0.0, 8.5, 8.5, 52.5, 0.0, 8.5, 8.5, 52.5, 0.0, 0.0, 0.0, 17.5],
    [16.5, 2.5, 2.5, 0.0, 232.0, 40.5, 40.5, 7.5, 2.5, 0.0, 0.0, 0.0, 40.5, 7.5, 7.5, 0.0],
    [1.5, 40.5, 0.0, 8.5, 40.5, 161.0, 8.5, 52.5, 0.0, 8.5, 0.0, 0.0, 8.5, 52.5, 0.0, 17.5],
    [1.5, 0.0, 40.5, 8.5, 40.5, 8.5, 161.0, 52.5, 0.0, 0.0, 8.5, 0.0, 8.5, 0.0, 52.5, 17.5],
    [0.0, 7.5, 7.5, 52.5, 7.5, 52.5, 52.5, 112.0, 0.0, 0.0, 0.0, 18.5, 0.0, 18.5, 18.5, 52.5],
    [16.5, 2.5, 2.5, 0.0, 2.5, 0.0, 0.0, 0.0, 232.0, 40.5, 40.5, 7.5, 40.5, 7.5, 7.5, 0.0],
    [1.5, 40.5, 0.0, 8.5, 0.0, 8.5, 0.0, 0.0, 40.5, 161.0, 8.5, 52.5, 8.5, 52.5, 0.0, 17.5],
    [1.5, 0.0, 40.5, 8.5, 0.0, 0.0, 8.5, 0.0, 40.5, 8.5, 161.0, 52.5, 8.5, 0.0, 52.5, 17.5],
    [0.0, 7.5, 7.5, 52.5, 0.0, 0.0, 0.0, 18.5, 7.5, 52.5, 52.5, 112.0, 0.0, 18.5, 18.5, 52.5],
    [1.5, 0.0, 0.0, 0.0, 40.5, 8.5, 8.5, 0.0, 40.5, 8.5, 8.5, 0.0, 161.0, 52.5, 52.5, 17.5],
    [0.0, 7.5, 0.0, 0.0, 7.5, 52.5, 0.0, 18.5, 7.5, 52.5, 0.0, 18.5, 52.5, 112.0, 18.5, 52.5],
    [0.0, 0.0, 7.5, 0.0, 7.5, 0.0, 52.5, 18.5, 7.5, 0.0, 52.5, 18.5, 52.5, 18.5, 112.0, 52.5],
    [0.0, 0.0, 0.0, 17.5, 0.0, 17.5, 17.5, 52.5, 0.0, 17.5, 17.5, 52.5, 17.5, 52.5, 52.5, 85.0],
], dtype=np.float64)
