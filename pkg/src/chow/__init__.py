# Chow形式模块
# 包含Chow形式、诱导映射、自映射限制与Bézout次数界