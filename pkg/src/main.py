import argparse
import sys
from typing import Callable, Dict, List, Optional

from src.core.config import DEFAULT_GENUS_CUTOFF, DEFAULT_Q_ORDER, VERTEX_ORDER
from src.core.logger import app_logger, get_logger, log_exception
from src.create_result import EXIT_MISMATCH, EXIT_PASS, EXIT_USAGE, FORMATS, ProcessingResult, run_create_result
from src.dtgw.correspondence import correspondence_check, dt_in_u
from src.dtgw.donaldson_thomas import z_contribution, z_degree_zero, z_reduced, z_reduced_class
from src.dtgw.geometry import Geometry, parse_multiplicities, parse_species, quintic_preset
from src.dtgw.gromov_witten import zgw_reduced_class
from src.partitions.partitions import (
    Partition, b2, enumerate_partitions, format_partition, hook_lengths, leg_weight,
    parse_partition, partition_count, size, transpose
)
from src.ratfun.ratfun import rf_eq, rf_expand, rf_subst_inv
from src.schur.schur import pd_schur
from src.series.series import mcmahon
from src.verification.suite import SUITES, run_verification
from src.vertex.box_count import p_enumerate, p_gf, pd_product, vertex_one_leg_check

# Флаги подкоманд: неизвестный флаг считается ошибкой разбора
FLAGS: Dict[str, dict] = {
    '--d': dict(type=int, help="Степень / размер разбиения"),
    '--n': dict(type=int, help="Индекс n в p(n, d)"),
    '--order': dict(type=int, help=f"Порядок усечения по q (по умолчанию {DEFAULT_Q_ORDER})"),
    '--degree': dict(type=int, help="Степень класса кривой D"),
    '--genus-cutoff': dict(type=int, default=DEFAULT_GENUS_CUTOFF, help="Род G: показатели u до 2G-2"),
    '--shape': dict(type=str, help='Разбиение, например "3,2,1"; пустая строка задаёт пустое разбиение'),
    '--chi': dict(type=int, help="Эйлерова характеристика"),
    '--species': dict(type=str, help='Виды кривых "count:class,count:class"'),
    '--dvec': dict(type=str, help='Кратности кривых "1,2"'),
    '--suite': dict(choices=SUITES, default='all', help="Набор проверок"),
    '--method': dict(choices=('enumeration', 'gf', 'both'), default='both', help="Способ вычисления p(n, d)"),
}

COMMANDS = {
    'partitions': ('--d', '--shape'),
    'pd': ('--d', '--order'),
    'mcmahon': ('--order', '--chi'),
    'pnd': ('--n', '--d', '--method'),
    'vertex-check': ('--shape', '--order'),
    'zdt': ('--chi', '--dvec', '--order', '--degree', '--species', '--genus-cutoff'),
    'zgw': ('--species', '--chi', '--degree', '--genus-cutoff'),
    'verify': ('--suite', '--degree', '--genus-cutoff'),
    'quintic': ('--degree', '--genus-cutoff'),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='python -m src.main',
        description="Точные статсуммы DT/GW для суперрегидных рациональных кривых",
        allow_abbrev=False,
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    for command, flags in COMMANDS.items():
        subparser = subparsers.add_parser(command, allow_abbrev=False)
        for flag in flags:
            subparser.add_argument(flag, **FLAGS[flag])
        subparser.add_argument('--format', choices=FORMATS, default='json', help="Формат вывода")
        subparser.add_argument('--save', action='store_true', help="Сохранить документ в каталог результатов")
    return parser


def describe_partition(shape: Partition) -> Dict:
    return {
        "shape": format_partition(shape),
        "size": size(shape),
        "transpose": format_partition(transpose(shape)),
        "hooks": hook_lengths(shape),
        "b2": b2(shape),
        "b2_transpose": b2(transpose(shape)),
        "leg_weight": leg_weight(shape),
    }


class Application:
    """Основной класс приложения: одна подкоманда на запуск."""

    def __init__(self):
        self.logger = get_logger('application')
        self.handlers: Dict[str, Callable[[argparse.Namespace], ProcessingResult]] = {
            'partitions': self._run_partitions,
            'pd': self._run_pd,
            'mcmahon': self._run_mcmahon,
            'pnd': self._run_pnd,
            'vertex-check': self._run_vertex_check,
            'zdt': self._run_zdt,
            'zgw': self._run_zgw,
            'verify': self._run_verify,
            'quintic': self._run_quintic,
        }

    def run(self, argv: Optional[List[str]] = None) -> int:
        """
        Разбирает аргументы, выполняет подкоманду и выводит документ.

        Returns:
            0: успех; 1: расхождение в проверке; 2: ошибка использования
        """
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as e:
            return EXIT_PASS if e.code == 0 else EXIT_USAGE

        self.logger.info(f"Запуск подкоманды {args.command}")
        try:
            result = self.handlers[args.command](args)
        except ValueError as e:
            log_exception(self.logger, f"Некорректные аргументы подкоманды {args.command}", e)
            return EXIT_USAGE
        except Exception as e:
            log_exception(self.logger, f"Ошибка при выполнении подкоманды {args.command}", e)
            return EXIT_MISMATCH

        result = run_create_result(args.command, result, args.format, args.save)
        if not result.success:
            self.logger.warning(f"Подкоманда {args.command}: {result.message}")
        return result.exit_code

    @staticmethod
    def _result(document: Dict, passed: bool = True, message: str = "Success") -> ProcessingResult:
        return ProcessingResult(success=passed, message=message if passed else "Mismatch",
                                document=document, exit_code=EXIT_PASS if passed else EXIT_MISMATCH)

    @staticmethod
    def _geometry(args: argparse.Namespace) -> Geometry:
        if args.species:
            return parse_species(args.species, euler_char=args.chi if args.chi is not None else 0)
        return quintic_preset()

    def _run_partitions(self, args: argparse.Namespace) -> ProcessingResult:
        if args.shape is not None:
            return self._result(describe_partition(parse_partition(args.shape)))
        d = args.d if args.d is not None else 0
        shapes = enumerate_partitions(d)
        return self._result({
            "d": d,
            "count": len(shapes),
            "pentagonal_count": partition_count(d),
            "partitions": [describe_partition(shape) for shape in shapes],
        }, passed=len(shapes) == partition_count(d))

    def _run_pd(self, args: argparse.Namespace) -> ProcessingResult:
        d = args.d if args.d is not None else 1
        order = args.order if args.order is not None else DEFAULT_Q_ORDER
        series = pd_product(d, order)
        closed_form = pd_schur(d)
        agree = series.agrees_with(rf_expand(closed_form, order))
        return self._result({
            "d": d,
            "series": series.to_json(),
            "closed_form": closed_form.to_json(),
            "agree": agree,
        }, passed=agree)

    def _run_mcmahon(self, args: argparse.Namespace) -> ProcessingResult:
        order = args.order if args.order is not None else DEFAULT_Q_ORDER
        if args.chi is None:
            return self._result({"series": mcmahon(order).to_json()})
        return self._result({"chi": args.chi, "series": z_degree_zero(args.chi, order).to_json()})

    def _run_pnd(self, args: argparse.Namespace) -> ProcessingResult:
        if args.n is None or args.d is None:
            raise ValueError("Подкоманда pnd требует --n и --d")
        document = {"n": args.n, "d": args.d}
        if args.method in ('enumeration', 'both'):
            document["enumeration"] = p_enumerate(args.n, args.d).count
        if args.method in ('gf', 'both'):
            document["generating_function"] = p_gf(args.d, args.n).coeff(args.n).to_int()
        passed = True
        if args.method == 'both':
            passed = document["enumeration"] == document["generating_function"]
            document["equal"] = passed
        return self._result(document, passed=passed)

    def _run_vertex_check(self, args: argparse.Namespace) -> ProcessingResult:
        shape = parse_partition(args.shape or '')
        order = args.order if args.order is not None else VERTEX_ORDER
        passed = vertex_one_leg_check(shape, order)
        return self._result({"shape": format_partition(shape), "order": order, "passed": passed}, passed=passed)

    def _run_zdt(self, args: argparse.Namespace) -> ProcessingResult:
        if args.degree is not None:
            geometry = self._geometry(args)
            reduced = z_reduced_class(geometry, args.degree)
            return self._result({
                "geometry": geometry.to_json(),
                "degree": args.degree,
                "reduced": reduced.to_json(),
                "q_inv_symmetric": rf_eq(reduced, rf_subst_inv(reduced)),
                "u_expansion": dt_in_u(reduced, args.genus_cutoff).to_json(),
            })
        chi = args.chi if args.chi is not None else 0
        order = args.order if args.order is not None else DEFAULT_Q_ORDER
        dvec = parse_multiplicities(args.dvec or '')
        return self._result({
            "chi": chi,
            "dvec": list(dvec),
            "series": z_contribution(chi, dvec, order).to_json(),
            "reduced": z_reduced(dvec).to_json(),
        })

    def _run_zgw(self, args: argparse.Namespace) -> ProcessingResult:
        geometry = self._geometry(args)
        degree = args.degree if args.degree is not None else 1
        return self._result({
            "geometry": geometry.to_json(),
            "degree": degree,
            "genus_cutoff": args.genus_cutoff,
            "series": zgw_reduced_class(geometry, degree, args.genus_cutoff).to_json(),
        })

    def _run_verify(self, args: argparse.Namespace) -> ProcessingResult:
        report = run_verification(args.suite, args.degree, args.genus_cutoff)
        return self._result(report.to_json(), passed=report.verdict == 'pass')

    def _run_quintic(self, args: argparse.Namespace) -> ProcessingResult:
        geometry = quintic_preset()
        degrees = (args.degree,) if args.degree is not None else (1, 2)
        reports = [correspondence_check(geometry, degree, args.genus_cutoff) for degree in degrees]
        passed = all(report.verdict == 'pass' for report in reports)
        return self._result({
            "geometry": geometry.to_json(),
            "reports": [report.to_json() for report in reports],
            "verdict": 'pass' if passed else 'fail',
        }, passed=passed)


def main(argv: Optional[List[str]] = None) -> int:
    app_logger.info("Запуск приложения")
    return Application().run(argv)


if __name__ == "__main__":
    sys.exit(main())
