# 高度模块
# 包含子簇高度、典范高度、显式常数与前周期搜索