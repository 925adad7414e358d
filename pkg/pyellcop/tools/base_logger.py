import logging

logger = logging.getLogger(__name__)

LOG_FMT = "[{scope}] {message}"


class BaseLogger:
    """
    Logging mixin of the long-lived components. Every message is prefixed
    with a scope, usually the estimator and model label or a case id.
    """

    def _log(self, scope: str, level: str, message: str) -> None:
        """
        Log a message with the given level.

        :param scope: the scope of the message
        :type scope: str
        :param level: the log level, a method name of logging.Logger
        :type level: str
        :param message: the message to log
        :type message: str
        """

        log_level = getattr(logger, level)
        log_level(LOG_FMT.format(scope=scope, message=message))

    def _log_debug(self, scope: str, message: str) -> None:
        self._log(scope, "debug", message)

    def _log_function_debug(
        self, fn_name: str, scope: str, args_name: str | None = None, args=None
    ) -> None:
        """
        Logs a message at the start of a public method.

        :param fn_name: the name of the method
        :type fn_name: str
        :param scope: the scope of the message
        :type scope: str
        :param args_name: the name of the arguments field
        :type args_name: str | None
        :param args: the arguments provided to the method
        :type args: Any
        """

        args_str = f" and {args_name}: {args}" if args_name else ""
        self._log_debug(scope, f"[CALL] {fn_name}{args_str}")

    def _log_info(self, scope: str, message: str) -> None:
        self._log(scope, "info", message)

    def _log_warning(self, scope: str, message: str) -> None:
        self._log(scope, "warning", message)

    def _log_error(self, scope: str, message: str) -> None:
        self._log(scope, "error", message)
