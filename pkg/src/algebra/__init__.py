# 精确代数模块
# 包含标量域、稀疏多项式环、多项式解析与打印