import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.core.logger import get_logger, log_exception
from src.core.paths import paths

FORMATS = ('json', 'plain')

EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


@dataclass
class ProcessingResult:
    """Результат выполнения команды."""
    success: bool
    message: str
    document: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = EXIT_PASS
    error: Optional[Exception] = None


def stringify_numbers(value: Any) -> Any:
    """Все целые числа документа записываются десятичными строками; bool не трогается."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {key: stringify_numbers(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [stringify_numbers(item) for item in value]
    return value


def _flatten(value: Any, prefix: str, out: List[tuple]) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            _flatten(item, f"{prefix}.{key}" if prefix else str(key), out)
    elif isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value):
        for index, item in enumerate(value):
            _flatten(item, f"{prefix}[{index}]", out)
    elif isinstance(value, list):
        out.append((prefix, ' '.join(str(item) for item in value)))
    elif isinstance(value, bool):
        out.append((prefix, 'true' if value else 'false'))
    else:
        out.append((prefix, str(value)))


class ResultWriter:
    def __init__(self, command: str, output_format: str = 'json', save: bool = False):
        if output_format not in FORMATS:
            raise ValueError(f"Неизвестный формат вывода: {output_format}")
        self.command = command
        self.output_format = output_format
        self.save = save
        self.logger = get_logger('create_result')

    def render(self, document: Dict[str, Any]) -> str:
        """JSON или выровненный текст "ключ  значение"; порядок ключей сохраняется."""
        document = stringify_numbers(document)
        if self.output_format == 'json':
            return json.dumps(document, ensure_ascii=False, indent=2)
        rows: List[tuple] = []
        _flatten(document, '', rows)
        width = max((len(key) for key, _ in rows), default=0)
        return '\n'.join(f"{key.ljust(width)}  {value}" for key, value in rows)

    def write(self, document: Dict[str, Any]) -> str:
        text = self.render(document)
        print(text)
        if self.save:
            try:
                paths.create_dirs()
                output_file = paths.result_file(self.command, 'json' if self.output_format == 'json' else 'txt')
                output_file.write_text(text + '\n', encoding='utf-8')
                self.logger.info(f"Документ сохранён в {output_file}")
            except OSError as e:
                log_exception(self.logger, "Ошибка при сохранении документа", e)
                raise
        return text


def run_create_result(command: str, result: ProcessingResult,
                      output_format: str = 'json', save: bool = False) -> ProcessingResult:
    """
    Выводит документ команды в stdout и, при save, в каталог результатов.

    Args:
        command: Имя подкоманды (имя файла при сохранении)
        result: Результат выполнения команды
        output_format: json или plain
        save: Сохранить копию документа

    Returns:
        Исходный результат; при ошибке записи success=False
    """
    try:
        ResultWriter(command, output_format, save).write(result.document)
        return result
    except Exception as e:
        log_exception(get_logger('create_result'), f"Ошибка при выводе результата команды {command}", e)
        return ProcessingResult(success=False, message=f"Error: {str(e)}", document=result.document,
                                exit_code=EXIT_MISMATCH, error=e)
