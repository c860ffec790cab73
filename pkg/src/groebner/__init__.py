# Gröbner基模块
# 包含单项式序、Buchberger算法、理想与Hilbert级数