# 动力学模块
# 包含射影态射、子簇、正像与原像、模p约化和轨道迭代