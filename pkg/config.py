from pydantic import BaseModel
from pydantic_settings import BaseSettings, SettingsConfigDict

class Worker_Settings(BaseSettings):
    WORKERS: int = 1
    
    model_config = SettingsConfigDict(env_file='.env',
                                      env_prefix='GRASS_',
                                      extra='ignore')

# Лимиты не читаются из окружения: поведение задаётся только флагами CLI
class Limits_Settings(BaseModel):
    MAX_N: int = 6
    MAX_INDEX_SIZE: int = 250_000
    PAIR_TEST_LIMIT: int = 4096
    EXHAUSTIVE_SYSTEMS: int = 5_000
    TRANSFORMATION_SYSTEMS: int = 100_000
    SIMILARITY_MAX_Q: int = 2
    SIMILARITY_MAX_N: int = 4
    RANDOM_SEED: int = 20240917
    RANDOM_IRREGULAR_SAMPLES: int = 500
    SYMPLECTIC_SAMPLES: int = 200
    REPORT_SCHEMA_VERSION: int = 1
    
settings_workers = Worker_Settings()
settings_limits = Limits_Settings()
