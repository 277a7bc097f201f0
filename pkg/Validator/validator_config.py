import os

import yaml

from errors import ConfigError

FILE_PATH = os.path.join(os.path.dirname(__file__), 'config.yaml')  # File path

MODES = ("draft", "complete")
FORMATS = ("text", "json")
SEVERITIES = ("warning", "error")


class ValidatorConfig:
    def __init__(self, path=FILE_PATH):
        self.path = path
        self.load_settings()

    def load_settings(self):
        try:
            with open(self.path, 'r', encoding='utf-8') as file:
                data = yaml.safe_load(file)
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"cannot read {self.path}: {e}") from e

        try:
            # Validation settings
            self.DEFAULT_MODE = data['VALIDATION']['DEFAULT_MODE']
            self.N_JOBS = int(data['VALIDATION']['N_JOBS'])
            self.PARALLEL_THRESHOLD = int(data['VALIDATION']['PARALLEL_THRESHOLD'])

            # Report settings
            self.DEFAULT_FORMAT = data['REPORT']['DEFAULT_FORMAT']
            self.FAIL_ON = data['REPORT']['FAIL_ON']
            self.JSON_INDENT = int(data['REPORT']['JSON_INDENT'])
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError(f"malformed {self.path}: {e}") from e

        if self.DEFAULT_MODE not in MODES or self.DEFAULT_FORMAT not in FORMATS or self.FAIL_ON not in SEVERITIES:
            raise ConfigError(f"malformed {self.path}: unsupported mode/format/fail-on value")
        if self.N_JOBS < 1:
            raise ConfigError(f"malformed {self.path}: N_JOBS must be at least 1")
