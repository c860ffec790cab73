# 周期模块
# 包含剩余域上的周期、计数界、乘子阶与好约化周期界