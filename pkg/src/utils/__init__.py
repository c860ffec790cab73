# 工具类模块
# 包含各种工具函数和类，如异常处理、日志配置等