import os
from typing import Any
from dotenv import load_dotenv

# Загружаем переменные окружения из .env файла, если он существует
load_dotenv()


def get_env(key: str, default: Any) -> Any:
    """Получает значение из переменных окружения или возвращает значение по умолчанию."""
    value = os.getenv(key)

    if value is None:
        return default

    # bool проверяется раньше int: bool является подклассом int
    if isinstance(default, bool):
        return value.lower() in ('true', 'yes', '1')
    elif isinstance(default, int):
        return int(value)
    elif isinstance(default, float):
        return float(value)
    else:
        return value


# Порядки усечения по умолчанию
DEFAULT_Q_ORDER = get_env('DEFAULT_Q_ORDER', 20)  # Порядок усечения рядов по q
DEFAULT_GENUS_CUTOFF = get_env('DEFAULT_GENUS_CUTOFF', 6)  # Род G: показатели u до 2G-2

# Настройки для параллельной обработки
DEFAULT_THREADS_COUNT = get_env('DEFAULT_THREADS_COUNT', 4)  # Количество потоков по умолчанию

# Настройки логирования
LOG_LEVEL = get_env('LOG_LEVEL', 'INFO')
LOG_TO_FILE = get_env('LOG_TO_FILE', True)  # Писать ли логи в файл помимо stderr
LOG_MAX_FILE_SIZE = get_env('LOG_MAX_FILE_SIZE', 10 * 1024 * 1024)  # Максимальный размер файла лога (10MB)
LOG_BACKUP_COUNT = get_env('LOG_BACKUP_COUNT', 5)  # Количество файлов резервных копий логов

# Данные квинтики (χ не используется приведёнными функциями, берётся из внешнего источника)
QUINTIC_EULER_CHARACTERISTIC = get_env('QUINTIC_EULER_CHARACTERISTIC', -200)
QUINTIC_LINES = get_env('QUINTIC_LINES', 2875)
QUINTIC_CONICS = get_env('QUINTIC_CONICS', 609250)

# Границы полного набора проверок (verify --suite all)
LEMMA_MAX_D = get_env('LEMMA_MAX_D', 4)
LEMMA_MAX_N = get_env('LEMMA_MAX_N', 12)
PD_MAX_D = get_env('PD_MAX_D', 6)
PD_ORDER = get_env('PD_ORDER', 30)
VERTEX_MAX_SHAPE = get_env('VERTEX_MAX_SHAPE', 3)
VERTEX_ORDER = get_env('VERTEX_ORDER', 8)
IDENTITY_MAX_SIZE = get_env('IDENTITY_MAX_SIZE', 8)
CAUCHY_Q_ORDER = get_env('CAUCHY_Q_ORDER', 12)
CAUCHY_V_ORDER = get_env('CAUCHY_V_ORDER', 4)
BIVARIATE_Q_ORDER = get_env('BIVARIATE_Q_ORDER', 10)
BIVARIATE_V_ORDER = get_env('BIVARIATE_V_ORDER', 3)
DEGREE_ZERO_ORDER = get_env('DEGREE_ZERO_ORDER', 15)
DEGREE_ZERO_CHIS = (-200, 0, 3)
TOY_MAX_DEGREE = get_env('TOY_MAX_DEGREE', 4)
