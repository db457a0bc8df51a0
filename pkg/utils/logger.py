# utils/logger.py - 日志管理器
import logging
import logging.handlers
import sys
from pathlib import Path

import colorlog

import config


class LoggerManager:
    """统一的日志管理器"""

    _loggers = {}
    _initialized = False

    @classmethod
    def setup(cls):
        """初始化日志系统"""
        if cls._initialized:
            return

        # 本工具的根日志器（不接管全局root，避免干扰宿主程序）
        root_logger = logging.getLogger(config.APP_NAME)
        root_logger.setLevel(getattr(logging, config.LOGGING["level"]))
        root_logger.propagate = False

        # 清除已有的处理器
        root_logger.handlers.clear()

        # 控制台处理器（stderr，保证stdout只有命令结果）
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(cls._get_formatter(colored=True))
        root_logger.addHandler(console_handler)

        # 文件处理器（可选）
        if config.LOGGING["log_to_file"]:
            log_dir = Path(config.LOGGING["log_dir"])
            log_dir.mkdir(exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                log_dir / config.LOGGING["file_name"],
                maxBytes=config.LOGGING["max_bytes"],
                backupCount=config.LOGGING["backup_count"],
                encoding=config.LOGGING["encoding"]
            )
            file_handler.setFormatter(cls._get_formatter())
            root_logger.addHandler(file_handler)

        cls._initialized = True

    @classmethod
    def get_logger(cls, name):
        """获取指定名称的日志器（挂在工具根日志器下）"""
        if not cls._initialized:
            cls.setup()

        if name not in cls._loggers:
            cls._loggers[name] = logging.getLogger(f"{config.APP_NAME}.{name}")

        return cls._loggers[name]

    @classmethod
    def set_level(cls, level):
        """调整日志级别（命令行 --verbose 使用）"""
        if not cls._initialized:
            cls.setup()

        if isinstance(level, str):
            level = getattr(logging, level.upper())
        logging.getLogger(config.APP_NAME).setLevel(level)

    @classmethod
    def _get_formatter(cls, colored=False):
        """获取日志格式化器"""
        if colored:
            return colorlog.ColoredFormatter(
                config.LOGGING["color_format"],
                datefmt=config.LOGGING["date_format"],
                log_colors=config.LOGGING["colors"]
            )

        return logging.Formatter(
            config.LOGGING["format"],
            datefmt=config.LOGGING["date_format"]
        )

    @classmethod
    def cleanup(cls):
        """清理日志系统"""
        root_logger = logging.getLogger(config.APP_NAME)
        for handler in root_logger.handlers[:]:
            handler.close()
            root_logger.removeHandler(handler)

        cls._loggers.clear()
        cls._initialized = False

# 便捷函数
def get_logger(name):
    """获取日志器的便捷函数"""
    return LoggerManager.get_logger(name)
