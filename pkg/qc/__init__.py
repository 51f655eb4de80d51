from .rules import check_report, compare_reports, semicircle_condition
