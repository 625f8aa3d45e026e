"""Manejadores de errores de la línea de comandos"""
import click
import orjson

from spatialgen.extensions import SpatialGenError, logger

EXIT_DOMAIN = 1
EXIT_USAGE = 2


def valid_flags(ctx):
    """Flags y subcomandos aceptados en el contexto donde falló el parseo"""
    if ctx is None:
        return []
    flags = []
    for param in ctx.command.params:
        if isinstance(param, click.Option):
            flags.extend(param.opts)
    if isinstance(ctx.command, click.Group):
        flags.extend(sorted(ctx.command.commands))
    return flags


def emit_error(payload):
    """Una línea JSON en stderr"""
    click.echo(orjson.dumps(payload, option=orjson.OPT_SORT_KEYS).decode('utf-8'), err=True)


def run_with_error_handling(command, argv, prog_name='spatialgen'):
    """
    Ejecuta un comando click y traduce excepciones a códigos de salida

    Returns:
        0 si todo salió bien, 1 en errores de dominio, 2 en errores de uso
    """
    try:
        result = command.main(args=list(argv), prog_name=prog_name, standalone_mode=False)
    except click.UsageError as e:
        emit_error({
            'error': 'UsageError',
            'message': e.format_message(),
            'valid_flags': valid_flags(e.ctx),
        })
        return EXIT_USAGE
    except SpatialGenError as e:
        logger.error(f"{e.code}: {e.message}")
        emit_error(e.to_dict())
        return EXIT_DOMAIN
    except click.ClickException as e:
        emit_error({'error': type(e).__name__, 'message': e.format_message()})
        return e.exit_code or EXIT_DOMAIN
    except ValueError as e:
        emit_error({'error': 'InvalidInput', 'message': str(e)})
        return EXIT_DOMAIN
    except click.Abort:
        emit_error({'error': 'Aborted', 'message': 'operación cancelada'})
        return EXIT_DOMAIN

    return result if isinstance(result, int) else 0
