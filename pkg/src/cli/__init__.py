# 命令行接口模块
# 提供命令行工具的入口和命令定义