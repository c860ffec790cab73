# 核心处理模块
# 负责把校验后的任务文件与子命令组织为确定性的计算报告