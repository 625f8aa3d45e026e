"""
Procesamiento por lotes y medición de tiempos
El reparto en procesos nunca cambia el orden ni el contenido de los resultados
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from functools import wraps

logger = logging.getLogger(__name__)


def batch_process(items, processor_func, workers=1, batch_size=256):
    """
    Aplica processor_func a cada item, opcionalmente en paralelo

    Args:
        items: Secuencia de argumentos
        processor_func: Función pura a nivel de módulo (picklable)
        workers: Número de procesos; 1 = secuencial
        batch_size: Tamaño de chunk entregado a cada proceso

    Returns:
        Lista de resultados en el mismo orden que items
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [processor_func(item) for item in items]

    chunksize = max(1, min(batch_size, len(items) // (workers * 4) or 1))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        # map conserva el orden de entrada sin importar el scheduling
        return list(executor.map(processor_func, items, chunksize=chunksize))


def timed(label=None):
    """Decorador que registra la duración de una operación"""
    def decorator(func):
        name = label or func.__name__

        @wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                elapsed = time.perf_counter() - start
                if elapsed > 1:
                    logger.info(f"{name} tardó {elapsed:.2f}s")
                else:
                    logger.debug(f"{name} tardó {elapsed * 1000:.1f}ms")
        return wrapper
    return decorator
