# 结式模块
# 包含Macaulay结式、基于结式的超曲面像、判别轨迹与Wustholz高度界