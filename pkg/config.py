# config.py - 定时元组演算工具配置文件

# 应用基本信息
APP_NAME = "ttc"
VERSION = "1.0.0"

# 随机等价检验配置
RANDOM_CHECK = {
    "trials": 200,              # 默认抽样次数
    "seed": 0,                  # 默认随机种子
    "zero_probability": 0.25,   # 抽到0的概率（提高以覆盖 0⁻¹ = 0 分支）
    "unit_probability": 0.15,   # 抽到 ±1 的概率
    "small_int_range": 5,       # 小整数范围 [-5, 5]
    "max_numerator": 1000,      # 随机有理数分子上限
    "max_denominator": 97       # 随机有理数分母上限
}

# 合成纯信贷产品的默认动作名
SYNTH_DEFAULTS = {
    "borrow": "loan",
    "repay": "repay"
}

# 命令行退出码
EXIT_CODES = {
    "ok": 0,              # 成功 / 结果为真 / 相等
    "false": 1,           # 结果为假 / 不相等
    "parse_error": 2,     # 语法错误
    "semantic_error": 3   # 语义错误（未绑定变量等）
}

# 保留字（不能用作动作名或变量名）
RESERVED_WORDS = frozenset({
    "eps", "bot", "test", "delay", "abs", "enc",
    "icap", "sign", "inv", "max", "min"
})

# 动作名和变量名的词法
IDENTIFIER_PATTERN = r"[a-zA-Z_][a-zA-Z0-9_']*"

# 特殊动作 ι 的名称
IOTA = "iota"

# 日志配置
LOGGING = {
    "level": "WARNING",
    "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    "color_format": "%(log_color)s%(levelname)-8s%(reset)s %(name)s: %(message)s",
    "date_format": "%Y-%m-%d %H:%M:%S",
    "log_to_file": False,       # 默认只输出到控制台
    "log_dir": "logs",
    "file_name": "ttc.log",
    "max_bytes": 10 * 1024 * 1024,  # 10MB
    "backup_count": 5,
    "encoding": "utf-8",
    "colors": {
        "DEBUG": "cyan",
        "INFO": "green",
        "WARNING": "yellow",
        "ERROR": "red",
        "CRITICAL": "bold_red"
    }
}

# 错误消息
ERROR_MESSAGES = {
    "parse_error": "语法错误 (第{line}行, 第{column}列): 期望 {expected}",
    "name_clash": "名称同时用作动作和变量: {names}",
    "bad_identifier": "非法标识符: {name}",
    "unbound_variable": "未绑定的变量: {name}",
    "unresolvable_guard": "无法判定守卫是否为零: {guard}",
    "blocked_behaviour": "行为是阻塞元组，无法计算隐含资本",
    "action_clash": "借贷动作与行为中的动作冲突: {actions}",
    "too_deep": "项的嵌套过深，超出递归深度限制",
    "invalid_rational": "非法有理数: {text}",
    "invalid_literal": "数值字面量必须为正且不等于1: {value}"
}
