# Subvariety-Dynamics
# 射影空间子簇算术动力学的精确计算工具

__version__ = "0.1.0"