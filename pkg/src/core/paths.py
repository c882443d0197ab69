from pathlib import Path


class PathManager:
    def __init__(self):
        self.BASE_DIR = Path(__file__).resolve().parent.parent.parent
        self.LOGS_DIR = self.BASE_DIR / "logs"

        # Документы, сохранённые с флагом --save
        self.RESULTS_DIR = self.BASE_DIR / "results_folder"

    def create_dirs(self) -> None:
        """Создает необходимые директории."""
        self.RESULTS_DIR.mkdir(exist_ok=True)
        self.LOGS_DIR.mkdir(exist_ok=True)

    def result_file(self, command: str, extension: str) -> Path:
        """Возвращает путь для сохранения документа команды."""
        return self.RESULTS_DIR / f"{command}.{extension}"


# Создаем глобальный экземпляр для удобного доступа
paths = PathManager()
