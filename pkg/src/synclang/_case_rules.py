# Generated by tools/derive_case_rules.py -- do not edit by hand.
# Decision patterns for constrained synchronization of the two structured
# families against small trimmed single-final constraint automata.
#
# Key format: "<states>:<final>:<cells>" where <cells> lists delta[q][x]
# for q in BFS order and x in (0, 1), with "." for an undefined transition.
# Patterns: Y always yes, N always no, E yes iff n even, O yes iff n odd,
# PE yes iff p even, PO yes iff p odd.

CASE1_RULES: dict[str, str] = {
    "2:0:.1.0": "N",
    "2:0:.10.": "Y",
    "2:0:.100": "Y",
    "2:0:.101": "Y",
    "2:0:.110": "E",
    "2:0:01.0": "E",
    "2:0:010.": "Y",
    "2:0:1..0": "Y",
    "2:0:1.0.": "N",
    "2:0:1.00": "Y",
    "2:0:1.01": "Y",
    "2:0:1.10": "Y",
    "2:0:10.0": "Y",
    "2:0:100.": "Y",
    "2:0:11.0": "Y",
    "2:0:110.": "Y",
    "2:1:.1..": "N",
    "2:1:.1.0": "N",
    "2:1:.1.1": "N",
    "2:1:.10.": "Y",
    "2:1:.100": "Y",
    "2:1:.101": "Y",
    "2:1:.11.": "N",
    "2:1:.110": "E",
    "2:1:.111": "Y",
    "2:1:01..": "N",
    "2:1:01.0": "E",
    "2:1:01.1": "N",
    "2:1:010.": "Y",
    "2:1:011.": "N",
    "2:1:1...": "N",
    "2:1:1..0": "Y",
    "2:1:1..1": "N",
    "2:1:1.0.": "N",
    "2:1:1.00": "Y",
    "2:1:1.01": "Y",
    "2:1:1.1.": "N",
    "2:1:1.10": "Y",
    "2:1:1.11": "Y",
    "2:1:10..": "N",
    "2:1:10.0": "Y",
    "2:1:10.1": "N",
    "2:1:100.": "Y",
    "2:1:101.": "N",
    "2:1:11..": "N",
    "2:1:11.0": "Y",
    "2:1:11.1": "N",
    "2:1:110.": "Y",
    "2:1:111.": "N",
    "3:0:.1.2.0": "N",
    "3:0:.1.20.": "E",
    "3:0:.1.200": "Y",
    "3:0:.1.201": "E",
    "3:0:.1.202": "Y",
    "3:0:.1.210": "Y",
    "3:0:.1.220": "NR3:02",
    "3:0:.102.0": "Y",
    "3:0:.102.1": "Y",
    "3:0:.1020.": "Y",
    "3:0:.10200": "Y",
    "3:0:.10201": "Y",
    "3:0:.10202": "Y",
    "3:0:.1021.": "Y",
    "3:0:.10210": "Y",
    "3:0:.10211": "Y",
    "3:0:.10212": "Y",
    "3:0:.10220": "Y",
    "3:0:.10221": "Y",
    "3:0:.112.0": "NR3:02",
    "3:0:.1120.": "Y",
    "3:0:.11200": "Y",
    "3:0:.11201": "Y",
    "3:0:.11202": "Y",
    "3:0:.11210": "Y",
    "3:0:.11220": "NR3:02",
    "3:0:.12..0": "E",
    "3:0:.12.0.": "Y",
    "3:0:.12.00": "Y",
    "3:0:.12.01": "Y",
    "3:0:.12.02": "Y",
    "3:0:.12.10": "E",
    "3:0:.12.20": "E",
    "3:0:.120.0": "E",
    "3:0:.120.1": "Y",
    "3:0:.1200.": "Y",
    "3:0:.12000": "Y",
    "3:0:.12001": "Y",
    "3:0:.12002": "Y",
    "3:0:.1201.": "E",
    "3:0:.12010": "E",
    "3:0:.12011": "Y",
    "3:0:.12012": "Y",
    "3:0:.12020": "E",
    "3:0:.12021": "Y",
    "3:0:.121.0": "Y",
    "3:0:.1210.": "Y",
    "3:0:.12100": "Y",
    "3:0:.12101": "Y",
    "3:0:.12102": "Y",
    "3:0:.12110": "Y",
    "3:0:.12120": "Y",
    "3:0:.122.0": "Y",
    "3:0:.1220.": "Y",
    "3:0:.12200": "Y",
    "3:0:.12201": "Y",
    "3:0:.12202": "Y",
    "3:0:.12210": "Y",
    "3:0:.12220": "Y",
    "3:0:01.2.0": "NR3:02",
    "3:0:01.20.": "E",
    "3:0:01.200": "Y",
    "3:0:01.201": "E",
    "3:0:01.202": "Y",
    "3:0:01.210": "Y",
    "3:0:01.220": "NR3:02",
    "3:0:0102.0": "Y",
    "3:0:0102.1": "Y",
    "3:0:01020.": "Y",
    "3:0:01021.": "Y",
    "3:0:0112.0": "NR3:02",
    "3:0:01120.": "Y",
    "3:0:012..0": "Y",
    "3:0:012.0.": "Y",
    "3:0:012.00": "Y",
    "3:0:012.01": "Y",
    "3:0:012.02": "Y",
    "3:0:012.10": "Y",
    "3:0:012.20": "Y",
    "3:0:0120.0": "Y",
    "3:0:0120.1": "Y",
    "3:0:01200.": "Y",
    "3:0:01201.": "Y",
    "3:0:0121.0": "Y",
    "3:0:01210.": "Y",
    "3:0:0122.0": "Y",
    "3:0:01220.": "Y",
    "3:0:1..2.0": "E",
    "3:0:1..20.": "Y",
    "3:0:1..200": "Y",
    "3:0:1..201": "Y",
    "3:0:1..202": "Y",
    "3:0:1..210": "Y",
    "3:0:1..220": "Y",
    "3:0:1.02.0": "E",
    "3:0:1.02.1": "E",
    "3:0:1.020.": "Y",
    "3:0:1.0200": "Y",
    "3:0:1.0201": "Y",
    "3:0:1.0202": "Y",
    "3:0:1.021.": "Y",
    "3:0:1.0210": "Y",
    "3:0:1.0211": "Y",
    "3:0:1.0212": "Y",
    "3:0:1.0220": "Y",
    "3:0:1.0221": "Y",
    "3:0:1.12.0": "E",
    "3:0:1.120.": "Y",
    "3:0:1.1200": "Y",
    "3:0:1.1201": "Y",
    "3:0:1.1202": "Y",
    "3:0:1.1210": "Y",
    "3:0:1.1220": "Y",
    "3:0:1.2..0": "Y",
    "3:0:1.2.0.": "N",
    "3:0:1.2.00": "Y",
    "3:0:1.2.01": "Y",
    "3:0:1.2.02": "Y",
    "3:0:1.2.10": "Y",
    "3:0:1.2.20": "Y",
    "3:0:1.20.0": "Y",
    "3:0:1.20.1": "Y",
    "3:0:1.200.": "Y",
    "3:0:1.2000": "Y",
    "3:0:1.2001": "Y",
    "3:0:1.2002": "Y",
    "3:0:1.201.": "Y",
    "3:0:1.2010": "Y",
    "3:0:1.2011": "Y",
    "3:0:1.2012": "Y",
    "3:0:1.2020": "Y",
    "3:0:1.2021": "Y",
    "3:0:1.21.0": "Y",
    "3:0:1.210.": "Y",
    "3:0:1.2100": "Y",
    "3:0:1.2101": "Y",
    "3:0:1.2102": "Y",
    "3:0:1.2110": "Y",
    "3:0:1.2120": "Y",
    "3:0:1.22.0": "Y",
    "3:0:1.220.": "Y",
    "3:0:1.2200": "Y",
    "3:0:1.2201": "Y",
    "3:0:1.2202": "Y",
    "3:0:1.2210": "Y",
    "3:0:1.2220": "Y",
    "3:0:10.2.0": "Y",
    "3:0:10.20.": "Y",
    "3:0:10.200": "Y",
    "3:0:10.201": "Y",
    "3:0:10.202": "Y",
    "3:0:10.210": "Y",
    "3:0:10.220": "Y",
    "3:0:1002.0": "Y",
    "3:0:1002.1": "Y",
    "3:0:10020.": "Y",
    "3:0:10021.": "Y",
    "3:0:1012.0": "Y",
    "3:0:10120.": "Y",
    "3:0:102..0": "Y",
    "3:0:102.0.": "Y",
    "3:0:102.00": "Y",
    "3:0:102.01": "Y",
    "3:0:102.02": "Y",
    "3:0:102.10": "Y",
    "3:0:102.20": "Y",
    "3:0:1020.0": "Y",
    "3:0:1020.1": "Y",
    "3:0:10200.": "Y",
    "3:0:10201.": "Y",
    "3:0:1021.0": "Y",
    "3:0:10210.": "Y",
    "3:0:1022.0": "Y",
    "3:0:10220.": "Y",
    "3:0:11.2.0": "Y",
    "3:0:11.20.": "Y",
    "3:0:11.200": "Y",
    "3:0:11.201": "Y",
    "3:0:11.202": "Y",
    "3:0:11.210": "Y",
    "3:0:11.220": "Y",
    "3:0:1102.0": "Y",
    "3:0:1102.1": "Y",
    "3:0:11020.": "Y",
    "3:0:11021.": "Y",
    "3:0:1112.0": "Y",
    "3:0:11120.": "Y",
    "3:0:112..0": "Y",
    "3:0:112.0.": "Y",
    "3:0:112.00": "Y",
    "3:0:112.01": "Y",
    "3:0:112.02": "Y",
    "3:0:112.10": "Y",
    "3:0:112.20": "Y",
    "3:0:1120.0": "Y",
    "3:0:1120.1": "Y",
    "3:0:11200.": "Y",
    "3:0:11201.": "Y",
    "3:0:1121.0": "Y",
    "3:0:11210.": "Y",
    "3:0:1122.0": "Y",
    "3:0:11220.": "Y",
    "3:0:12.0.0": "Y",
    "3:0:12.0.1": "Y",
    "3:0:12.00.": "Y",
    "3:0:12.000": "Y",
    "3:0:12.001": "Y",
    "3:0:12.002": "Y",
    "3:0:12.01.": "Y",
    "3:0:12.010": "Y",
    "3:0:12.011": "Y",
    "3:0:12.012": "Y",
    "3:0:12.020": "Y",
    "3:0:12.021": "Y",
    "3:0:12.2.0": "E",
    "3:0:12.20.": "Y",
    "3:0:12.200": "Y",
    "3:0:12.201": "Y",
    "3:0:12.202": "Y",
    "3:0:12.210": "Y",
    "3:0:12.220": "Y",
    "3:0:120..0": "E",
    "3:0:120..1": "E",
    "3:0:120.0.": "Y",
    "3:0:120.00": "Y",
    "3:0:120.01": "Y",
    "3:0:120.02": "Y",
    "3:0:120.1.": "Y",
    "3:0:120.10": "Y",
    "3:0:120.11": "Y",
    "3:0:120.12": "Y",
    "3:0:120.20": "Y",
    "3:0:120.21": "Y",
    "3:0:1200.0": "Y",
    "3:0:1200.1": "Y",
    "3:0:12000.": "Y",
    "3:0:12001.": "Y",
    "3:0:1201.0": "Y",
    "3:0:1201.1": "Y",
    "3:0:12010.": "Y",
    "3:0:12011.": "Y",
    "3:0:1202.0": "E",
    "3:0:1202.1": "E",
    "3:0:12020.": "Y",
    "3:0:12021.": "Y",
    "3:0:1210.0": "Y",
    "3:0:1210.1": "Y",
    "3:0:12100.": "Y",
    "3:0:12101.": "Y",
    "3:0:1212.0": "E",
    "3:0:12120.": "Y",
    "3:0:122..0": "Y",
    "3:0:122.0.": "Y",
    "3:0:122.00": "Y",
    "3:0:122.01": "Y",
    "3:0:122.02": "Y",
    "3:0:122.10": "Y",
    "3:0:122.20": "Y",
    "3:0:1220.0": "Y",
    "3:0:1220.1": "Y",
    "3:0:12200.": "Y",
    "3:0:12201.": "Y",
    "3:0:1221.0": "Y",
    "3:0:12210.": "Y",
    "3:0:1222.0": "Y",
    "3:0:12220.": "Y",
    "3:1:.1.2.0": "N",
    "3:1:.1.2.1": "N",
    "3:1:.1.20.": "E",
    "3:1:.1.200": "Y",
    "3:1:.1.201": "E",
    "3:1:.1.202": "Y",
    "3:1:.1.21.": "Y",
    "3:1:.1.210": "Y",
    "3:1:.1.211": "Y",
    "3:1:.1.212": "Y",
    "3:1:.1.220": "NR3:02",
    "3:1:.1.221": "E",
    "3:1:.102.0": "Y",
    "3:1:.102.1": "Y",
    "3:1:.1020.": "Y",
    "3:1:.10200": "Y",
    "3:1:.10201": "Y",
    "3:1:.10202": "Y",
    "3:1:.1021.": "Y",
    "3:1:.10210": "Y",
    "3:1:.10211": "Y",
    "3:1:.10212": "Y",
    "3:1:.10220": "Y",
    "3:1:.10221": "Y",
    "3:1:.112.0": "NR3:02",
    "3:1:.112.1": "E",
    "3:1:.1120.": "Y",
    "3:1:.11200": "Y",
    "3:1:.11201": "Y",
    "3:1:.11202": "Y",
    "3:1:.1121.": "Y",
    "3:1:.11210": "Y",
    "3:1:.11211": "Y",
    "3:1:.11212": "Y",
    "3:1:.11220": "NR3:02",
    "3:1:.11221": "Y",
    "3:1:.12..0": "E",
    "3:1:.12..1": "Y",
    "3:1:.12.0.": "Y",
    "3:1:.12.00": "Y",
    "3:1:.12.01": "Y",
    "3:1:.12.02": "Y",
    "3:1:.12.1.": "N",
    "3:1:.12.10": "E",
    "3:1:.12.11": "Y",
    "3:1:.12.12": "Y",
    "3:1:.12.20": "E",
    "3:1:.12.21": "Y",
    "3:1:.120.0": "E",
    "3:1:.120.1": "Y",
    "3:1:.1200.": "Y",
    "3:1:.12000": "Y",
    "3:1:.12001": "Y",
    "3:1:.12002": "Y",
    "3:1:.1201.": "E",
    "3:1:.12010": "E",
    "3:1:.12011": "Y",
    "3:1:.12012": "Y",
    "3:1:.12020": "E",
    "3:1:.12021": "Y",
    "3:1:.121.0": "Y",
    "3:1:.121.1": "Y",
    "3:1:.1210.": "Y",
    "3:1:.12100": "Y",
    "3:1:.12101": "Y",
    "3:1:.12102": "Y",
    "3:1:.1211.": "Y",
    "3:1:.12110": "Y",
    "3:1:.12111": "Y",
    "3:1:.12112": "Y",
    "3:1:.12120": "Y",
    "3:1:.12121": "Y",
    "3:1:.122.0": "Y",
    "3:1:.122.1": "Y",
    "3:1:.1220.": "Y",
    "3:1:.12200": "Y",
    "3:1:.12201": "Y",
    "3:1:.12202": "Y",
    "3:1:.1221.": "Y",
    "3:1:.12210": "Y",
    "3:1:.12211": "Y",
    "3:1:.12212": "Y",
    "3:1:.12220": "Y",
    "3:1:.12221": "Y",
    "3:1:01.2.0": "NR3:02",
    "3:1:01.2.1": "N",
    "3:1:01.20.": "E",
    "3:1:01.200": "Y",
    "3:1:01.201": "E",
    "3:1:01.202": "Y",
    "3:1:01.21.": "Y",
    "3:1:01.210": "Y",
    "3:1:01.211": "Y",
    "3:1:01.212": "Y",
    "3:1:01.220": "NR3:02",
    "3:1:01.221": "E",
    "3:1:0102.0": "Y",
    "3:1:0102.1": "Y",
    "3:1:01020.": "Y",
    "3:1:01021.": "Y",
    "3:1:0112.0": "NR3:02",
    "3:1:0112.1": "E",
    "3:1:01120.": "Y",
    "3:1:01121.": "Y",
    "3:1:012..0": "Y",
    "3:1:012..1": "Y",
    "3:1:012.0.": "Y",
    "3:1:012.00": "Y",
    "3:1:012.01": "Y",
    "3:1:012.02": "Y",
    "3:1:012.1.": "N",
    "3:1:012.10": "Y",
    "3:1:012.11": "Y",
    "3:1:012.12": "Y",
    "3:1:012.20": "Y",
    "3:1:012.21": "Y",
    "3:1:0120.0": "Y",
    "3:1:0120.1": "Y",
    "3:1:01200.": "Y",
    "3:1:01201.": "Y",
    "3:1:0121.0": "Y",
    "3:1:0121.1": "Y",
    "3:1:01210.": "Y",
    "3:1:01211.": "Y",
    "3:1:0122.0": "Y",
    "3:1:0122.1": "Y",
    "3:1:01220.": "Y",
    "3:1:01221.": "Y",
    "3:1:1..2.0": "E",
    "3:1:1..2.1": "N",
    "3:1:1..20.": "Y",
    "3:1:1..200": "Y",
    "3:1:1..201": "Y",
    "3:1:1..202": "Y",
    "3:1:1..21.": "Y",
    "3:1:1..210": "Y",
    "3:1:1..211": "Y",
    "3:1:1..212": "Y",
    "3:1:1..220": "Y",
    "3:1:1..221": "E",
    "3:1:1.02.0": "E",
    "3:1:1.02.1": "E",
    "3:1:1.020.": "Y",
    "3:1:1.0200": "Y",
    "3:1:1.0201": "Y",
    "3:1:1.0202": "Y",
    "3:1:1.021.": "Y",
    "3:1:1.0210": "Y",
    "3:1:1.0211": "Y",
    "3:1:1.0212": "Y",
    "3:1:1.0220": "Y",
    "3:1:1.0221": "Y",
    "3:1:1.12.0": "E",
    "3:1:1.12.1": "E",
    "3:1:1.120.": "Y",
    "3:1:1.1200": "Y",
    "3:1:1.1201": "Y",
    "3:1:1.1202": "Y",
    "3:1:1.121.": "Y",
    "3:1:1.1210": "Y",
    "3:1:1.1211": "Y",
    "3:1:1.1212": "Y",
    "3:1:1.1220": "Y",
    "3:1:1.1221": "Y",
    "3:1:1.2..0": "Y",
    "3:1:1.2..1": "Y",
    "3:1:1.2.0.": "N",
    "3:1:1.2.00": "Y",
    "3:1:1.2.01": "Y",
    "3:1:1.2.02": "Y",
    "3:1:1.2.1.": "N",
    "3:1:1.2.10": "Y",
    "3:1:1.2.11": "Y",
    "3:1:1.2.12": "Y",
    "3:1:1.2.20": "Y",
    "3:1:1.2.21": "Y",
    "3:1:1.20.0": "Y",
    "3:1:1.20.1": "Y",
    "3:1:1.200.": "Y",
    "3:1:1.2000": "Y",
    "3:1:1.2001": "Y",
    "3:1:1.2002": "Y",
    "3:1:1.201.": "Y",
    "3:1:1.2010": "Y",
    "3:1:1.2011": "Y",
    "3:1:1.2012": "Y",
    "3:1:1.2020": "Y",
    "3:1:1.2021": "Y",
    "3:1:1.21.0": "Y",
    "3:1:1.21.1": "Y",
    "3:1:1.210.": "Y",
    "3:1:1.2100": "Y",
    "3:1:1.2101": "Y",
    "3:1:1.2102": "Y",
    "3:1:1.211.": "Y",
    "3:1:1.2110": "Y",
    "3:1:1.2111": "Y",
    "3:1:1.2112": "Y",
    "3:1:1.2120": "Y",
    "3:1:1.2121": "Y",
    "3:1:1.22.0": "Y",
    "3:1:1.22.1": "Y",
    "3:1:1.220.": "Y",
    "3:1:1.2200": "Y",
    "3:1:1.2201": "Y",
    "3:1:1.2202": "Y",
    "3:1:1.221.": "Y",
    "3:1:1.2210": "Y",
    "3:1:1.2211": "Y",
    "3:1:1.2212": "Y",
    "3:1:1.2220": "Y",
    "3:1:1.2221": "Y",
    "3:1:10.2.0": "Y",
    "3:1:10.2.1": "N",
    "3:1:10.20.": "Y",
    "3:1:10.200": "Y",
    "3:1:10.201": "Y",
    "3:1:10.202": "Y",
    "3:1:10.21.": "Y",
    "3:1:10.210": "Y",
    "3:1:10.211": "Y",
    "3:1:10.212": "Y",
    "3:1:10.220": "Y",
    "3:1:10.221": "E",
    "3:1:1002.0": "Y",
    "3:1:1002.1": "Y",
    "3:1:10020.": "Y",
    "3:1:10021.": "Y",
    "3:1:1012.0": "Y",
    "3:1:1012.1": "E",
    "3:1:10120.": "Y",
    "3:1:10121.": "Y",
    "3:1:102..0": "Y",
    "3:1:102..1": "Y",
    "3:1:102.0.": "Y",
    "3:1:102.00": "Y",
    "3:1:102.01": "Y",
    "3:1:102.02": "Y",
    "3:1:102.1.": "N",
    "3:1:102.10": "Y",
    "3:1:102.11": "Y",
    "3:1:102.12": "Y",
    "3:1:102.20": "Y",
    "3:1:102.21": "Y",
    "3:1:1020.0": "Y",
    "3:1:1020.1": "Y",
    "3:1:10200.": "Y",
    "3:1:10201.": "Y",
    "3:1:1021.0": "Y",
    "3:1:1021.1": "Y",
    "3:1:10210.": "Y",
    "3:1:10211.": "Y",
    "3:1:1022.0": "Y",
    "3:1:1022.1": "Y",
    "3:1:10220.": "Y",
    "3:1:10221.": "Y",
    "3:1:11.2.0": "Y",
    "3:1:11.2.1": "N",
    "3:1:11.20.": "Y",
    "3:1:11.200": "Y",
    "3:1:11.201": "Y",
    "3:1:11.202": "Y",
    "3:1:11.21.": "Y",
    "3:1:11.210": "Y",
    "3:1:11.211": "Y",
    "3:1:11.212": "Y",
    "3:1:11.220": "Y",
    "3:1:11.221": "E",
    "3:1:1102.0": "Y",
    "3:1:1102.1": "Y",
    "3:1:11020.": "Y",
    "3:1:11021.": "Y",
    "3:1:1112.0": "Y",
    "3:1:1112.1": "E",
    "3:1:11120.": "Y",
    "3:1:11121.": "Y",
    "3:1:112..0": "Y",
    "3:1:112..1": "Y",
    "3:1:112.0.": "Y",
    "3:1:112.00": "Y",
    "3:1:112.01": "Y",
    "3:1:112.02": "Y",
    "3:1:112.1.": "N",
    "3:1:112.10": "Y",
    "3:1:112.11": "Y",
    "3:1:112.12": "Y",
    "3:1:112.20": "Y",
    "3:1:112.21": "Y",
    "3:1:1120.0": "Y",
    "3:1:1120.1": "Y",
    "3:1:11200.": "Y",
    "3:1:11201.": "Y",
    "3:1:1121.0": "Y",
    "3:1:1121.1": "Y",
    "3:1:11210.": "Y",
    "3:1:11211.": "Y",
    "3:1:1122.0": "Y",
    "3:1:1122.1": "Y",
    "3:1:11220.": "Y",
    "3:1:11221.": "Y",
    "3:1:12...0": "N",
    "3:1:12...1": "N",
    "3:1:12..0.": "Y",
    "3:1:12..00": "Y",
    "3:1:12..01": "Y",
    "3:1:12..02": "Y",
    "3:1:12..1.": "N",
    "3:1:12..10": "N",
    "3:1:12..11": "N",
    "3:1:12..12": "N",
    "3:1:12..20": "E",
    "3:1:12..21": "N",
    "3:1:12.0.0": "Y",
    "3:1:12.0.1": "Y",
    "3:1:12.00.": "Y",
    "3:1:12.000": "Y",
    "3:1:12.001": "Y",
    "3:1:12.002": "Y",
    "3:1:12.01.": "Y",
    "3:1:12.010": "Y",
    "3:1:12.011": "Y",
    "3:1:12.012": "Y",
    "3:1:12.020": "Y",
    "3:1:12.021": "Y",
    "3:1:12.1.0": "N",
    "3:1:12.1.1": "N",
    "3:1:12.10.": "Y",
    "3:1:12.100": "Y",
    "3:1:12.101": "Y",
    "3:1:12.102": "Y",
    "3:1:12.11.": "N",
    "3:1:12.110": "N",
    "3:1:12.111": "N",
    "3:1:12.112": "N",
    "3:1:12.120": "E",
    "3:1:12.121": "N",
    "3:1:12.2.0": "E",
    "3:1:12.2.1": "N",
    "3:1:12.20.": "Y",
    "3:1:12.200": "Y",
    "3:1:12.201": "Y",
    "3:1:12.202": "Y",
    "3:1:12.21.": "Y",
    "3:1:12.210": "Y",
    "3:1:12.211": "Y",
    "3:1:12.212": "Y",
    "3:1:12.220": "Y",
    "3:1:12.221": "E",
    "3:1:120..0": "E",
    "3:1:120..1": "E",
    "3:1:120.0.": "Y",
    "3:1:120.00": "Y",
    "3:1:120.01": "Y",
    "3:1:120.02": "Y",
    "3:1:120.1.": "Y",
    "3:1:120.10": "Y",
    "3:1:120.11": "Y",
    "3:1:120.12": "Y",
    "3:1:120.20": "Y",
    "3:1:120.21": "Y",
    "3:1:1200.0": "Y",
    "3:1:1200.1": "Y",
    "3:1:12000.": "Y",
    "3:1:12001.": "Y",
    "3:1:1201.0": "Y",
    "3:1:1201.1": "Y",
    "3:1:12010.": "Y",
    "3:1:12011.": "Y",
    "3:1:1202.0": "E",
    "3:1:1202.1": "E",
    "3:1:12020.": "Y",
    "3:1:12021.": "Y",
    "3:1:121..0": "N",
    "3:1:121..1": "N",
    "3:1:121.0.": "Y",
    "3:1:121.00": "Y",
    "3:1:121.01": "Y",
    "3:1:121.02": "Y",
    "3:1:121.1.": "N",
    "3:1:121.10": "N",
    "3:1:121.11": "N",
    "3:1:121.12": "N",
    "3:1:121.20": "E",
    "3:1:121.21": "N",
    "3:1:1210.0": "Y",
    "3:1:1210.1": "Y",
    "3:1:12100.": "Y",
    "3:1:12101.": "Y",
    "3:1:1211.0": "Y",
    "3:1:1211.1": "Y",
    "3:1:12110.": "Y",
    "3:1:12111.": "Y",
    "3:1:1212.0": "E",
    "3:1:1212.1": "E",
    "3:1:12120.": "Y",
    "3:1:12121.": "Y",
    "3:1:122..0": "Y",
    "3:1:122..1": "Y",
    "3:1:122.0.": "Y",
    "3:1:122.00": "Y",
    "3:1:122.01": "Y",
    "3:1:122.02": "Y",
    "3:1:122.1.": "N",
    "3:1:122.10": "Y",
    "3:1:122.11": "Y",
    "3:1:122.12": "Y",
    "3:1:122.20": "Y",
    "3:1:122.21": "Y",
    "3:1:1220.0": "Y",
    "3:1:1220.1": "Y",
    "3:1:12200.": "Y",
    "3:1:12201.": "Y",
    "3:1:1221.0": "Y",
    "3:1:1221.1": "Y",
    "3:1:12210.": "Y",
    "3:1:12211.": "Y",
    "3:1:1222.0": "Y",
    "3:1:1222.1": "Y",
    "3:1:12220.": "Y",
    "3:1:12221.": "Y",
    "3:2:.1.2..": "N",
    "3:2:.1.2.0": "N",
    "3:2:.1.2.1": "N",
    "3:2:.1.2.2": "N",
    "3:2:.1.20.": "E",
    "3:2:.1.200": "Y",
    "3:2:.1.201": "E",
    "3:2:.1.202": "Y",
    "3:2:.1.21.": "Y",
    "3:2:.1.210": "Y",
    "3:2:.1.211": "Y",
    "3:2:.1.212": "Y",
    "3:2:.1.22.": "N",
    "3:2:.1.220": "NR3:02",
    "3:2:.1.221": "E",
    "3:2:.1.222": "Y",
    "3:2:.102..": "Y",
    "3:2:.102.0": "Y",
    "3:2:.102.1": "Y",
    "3:2:.102.2": "Y",
    "3:2:.1020.": "Y",
    "3:2:.10200": "Y",
    "3:2:.10201": "Y",
    "3:2:.10202": "Y",
    "3:2:.1021.": "Y",
    "3:2:.10210": "Y",
    "3:2:.10211": "Y",
    "3:2:.10212": "Y",
    "3:2:.1022.": "Y",
    "3:2:.10220": "Y",
    "3:2:.10221": "Y",
    "3:2:.10222": "Y",
    "3:2:.112..": "N",
    "3:2:.112.0": "NR3:02",
    "3:2:.112.1": "E",
    "3:2:.112.2": "N",
    "3:2:.1120.": "Y",
    "3:2:.11200": "Y",
    "3:2:.11201": "Y",
    "3:2:.11202": "Y",
    "3:2:.1121.": "Y",
    "3:2:.11210": "Y",
    "3:2:.11211": "Y",
    "3:2:.11212": "Y",
    "3:2:.1122.": "N",
    "3:2:.11220": "NR3:02",
    "3:2:.11221": "Y",
    "3:2:.11222": "Y",
    "3:2:.12...": "N",
    "3:2:.12..0": "E",
    "3:2:.12..1": "Y",
    "3:2:.12..2": "N",
    "3:2:.12.0.": "Y",
    "3:2:.12.00": "Y",
    "3:2:.12.01": "Y",
    "3:2:.12.02": "Y",
    "3:2:.12.1.": "N",
    "3:2:.12.10": "E",
    "3:2:.12.11": "Y",
    "3:2:.12.12": "Y",
    "3:2:.12.2.": "N",
    "3:2:.12.20": "E",
    "3:2:.12.21": "Y",
    "3:2:.12.22": "Y",
    "3:2:.120..": "N",
    "3:2:.120.0": "E",
    "3:2:.120.1": "Y",
    "3:2:.120.2": "N",
    "3:2:.1200.": "Y",
    "3:2:.12000": "Y",
    "3:2:.12001": "Y",
    "3:2:.12002": "Y",
    "3:2:.1201.": "E",
    "3:2:.12010": "E",
    "3:2:.12011": "Y",
    "3:2:.12012": "Y",
    "3:2:.1202.": "N",
    "3:2:.12020": "E",
    "3:2:.12021": "Y",
    "3:2:.12022": "Y",
    "3:2:.121..": "N",
    "3:2:.121.0": "Y",
    "3:2:.121.1": "Y",
    "3:2:.121.2": "N",
    "3:2:.1210.": "Y",
    "3:2:.12100": "Y",
    "3:2:.12101": "Y",
    "3:2:.12102": "Y",
    "3:2:.1211.": "Y",
    "3:2:.12110": "Y",
    "3:2:.12111": "Y",
    "3:2:.12112": "Y",
    "3:2:.1212.": "N",
    "3:2:.12120": "Y",
    "3:2:.12121": "Y",
    "3:2:.12122": "Y",
    "3:2:.122..": "N",
    "3:2:.122.0": "Y",
    "3:2:.122.1": "Y",
    "3:2:.122.2": "N",
    "3:2:.1220.": "Y",
    "3:2:.12200": "Y",
    "3:2:.12201": "Y",
    "3:2:.12202": "Y",
    "3:2:.1221.": "Y",
    "3:2:.12210": "Y",
    "3:2:.12211": "Y",
    "3:2:.12212": "Y",
    "3:2:.1222.": "N",
    "3:2:.12220": "Y",
    "3:2:.12221": "Y",
    "3:2:.12222": "Y",
    "3:2:01.2..": "N",
    "3:2:01.2.0": "NR3:02",
    "3:2:01.2.1": "N",
    "3:2:01.2.2": "N",
    "3:2:01.20.": "E",
    "3:2:01.200": "Y",
    "3:2:01.201": "E",
    "3:2:01.202": "Y",
    "3:2:01.21.": "Y",
    "3:2:01.210": "Y",
    "3:2:01.211": "Y",
    "3:2:01.212": "Y",
    "3:2:01.22.": "N",
    "3:2:01.220": "NR3:02",
    "3:2:01.221": "E",
    "3:2:01.222": "Y",
    "3:2:0102..": "Y",
    "3:2:0102.0": "Y",
    "3:2:0102.1": "Y",
    "3:2:0102.2": "Y",
    "3:2:01020.": "Y",
    "3:2:01021.": "Y",
    "3:2:01022.": "Y",
    "3:2:0112..": "N",
    "3:2:0112.0": "NR3:02",
    "3:2:0112.1": "E",
    "3:2:0112.2": "N",
    "3:2:01120.": "Y",
    "3:2:01121.": "Y",
    "3:2:01122.": "N",
    "3:2:012...": "N",
    "3:2:012..0": "Y",
    "3:2:012..1": "Y",
    "3:2:012..2": "N",
    "3:2:012.0.": "Y",
    "3:2:012.00": "Y",
    "3:2:012.01": "Y",
    "3:2:012.02": "Y",
    "3:2:012.1.": "N",
    "3:2:012.10": "Y",
    "3:2:012.11": "Y",
    "3:2:012.12": "Y",
    "3:2:012.2.": "N",
    "3:2:012.20": "Y",
    "3:2:012.21": "Y",
    "3:2:012.22": "Y",
    "3:2:0120..": "E",
    "3:2:0120.0": "Y",
    "3:2:0120.1": "Y",
    "3:2:0120.2": "E",
    "3:2:01200.": "Y",
    "3:2:01201.": "Y",
    "3:2:01202.": "E",
    "3:2:0121..": "N",
    "3:2:0121.0": "Y",
    "3:2:0121.1": "Y",
    "3:2:0121.2": "N",
    "3:2:01210.": "Y",
    "3:2:01211.": "Y",
    "3:2:01212.": "N",
    "3:2:0122..": "N",
    "3:2:0122.0": "Y",
    "3:2:0122.1": "Y",
    "3:2:0122.2": "N",
    "3:2:01220.": "Y",
    "3:2:01221.": "Y",
    "3:2:01222.": "N",
    "3:2:1..2..": "N",
    "3:2:1..2.0": "E",
    "3:2:1..2.1": "N",
    "3:2:1..2.2": "N",
    "3:2:1..20.": "Y",
    "3:2:1..200": "Y",
    "3:2:1..201": "Y",
    "3:2:1..202": "Y",
    "3:2:1..21.": "Y",
    "3:2:1..210": "Y",
    "3:2:1..211": "Y",
    "3:2:1..212": "Y",
    "3:2:1..22.": "N",
    "3:2:1..220": "Y",
    "3:2:1..221": "E",
    "3:2:1..222": "Y",
    "3:2:1.02..": "N",
    "3:2:1.02.0": "E",
    "3:2:1.02.1": "E",
    "3:2:1.02.2": "N",
    "3:2:1.020.": "Y",
    "3:2:1.0200": "Y",
    "3:2:1.0201": "Y",
    "3:2:1.0202": "Y",
    "3:2:1.021.": "Y",
    "3:2:1.0210": "Y",
    "3:2:1.0211": "Y",
    "3:2:1.0212": "Y",
    "3:2:1.022.": "N",
    "3:2:1.0220": "Y",
    "3:2:1.0221": "Y",
    "3:2:1.0222": "Y",
    "3:2:1.12..": "N",
    "3:2:1.12.0": "E",
    "3:2:1.12.1": "E",
    "3:2:1.12.2": "N",
    "3:2:1.120.": "Y",
    "3:2:1.1200": "Y",
    "3:2:1.1201": "Y",
    "3:2:1.1202": "Y",
    "3:2:1.121.": "Y",
    "3:2:1.1210": "Y",
    "3:2:1.1211": "Y",
    "3:2:1.1212": "Y",
    "3:2:1.122.": "N",
    "3:2:1.1220": "Y",
    "3:2:1.1221": "Y",
    "3:2:1.1222": "Y",
    "3:2:1.2...": "N",
    "3:2:1.2..0": "Y",
    "3:2:1.2..1": "Y",
    "3:2:1.2..2": "N",
    "3:2:1.2.0.": "N",
    "3:2:1.2.00": "Y",
    "3:2:1.2.01": "Y",
    "3:2:1.2.02": "Y",
    "3:2:1.2.1.": "N",
    "3:2:1.2.10": "Y",
    "3:2:1.2.11": "Y",
    "3:2:1.2.12": "Y",
    "3:2:1.2.2.": "N",
    "3:2:1.2.20": "Y",
    "3:2:1.2.21": "Y",
    "3:2:1.2.22": "Y",
    "3:2:1.20..": "Y",
    "3:2:1.20.0": "Y",
    "3:2:1.20.1": "Y",
    "3:2:1.20.2": "Y",
    "3:2:1.200.": "Y",
    "3:2:1.2000": "Y",
    "3:2:1.2001": "Y",
    "3:2:1.2002": "Y",
    "3:2:1.201.": "Y",
    "3:2:1.2010": "Y",
    "3:2:1.2011": "Y",
    "3:2:1.2012": "Y",
    "3:2:1.202.": "Y",
    "3:2:1.2020": "Y",
    "3:2:1.2021": "Y",
    "3:2:1.2022": "Y",
    "3:2:1.21..": "N",
    "3:2:1.21.0": "Y",
    "3:2:1.21.1": "Y",
    "3:2:1.21.2": "N",
    "3:2:1.210.": "Y",
    "3:2:1.2100": "Y",
    "3:2:1.2101": "Y",
    "3:2:1.2102": "Y",
    "3:2:1.211.": "Y",
    "3:2:1.2110": "Y",
    "3:2:1.2111": "Y",
    "3:2:1.2112": "Y",
    "3:2:1.212.": "N",
    "3:2:1.2120": "Y",
    "3:2:1.2121": "Y",
    "3:2:1.2122": "Y",
    "3:2:1.22..": "N",
    "3:2:1.22.0": "Y",
    "3:2:1.22.1": "Y",
    "3:2:1.22.2": "N",
    "3:2:1.220.": "Y",
    "3:2:1.2200": "Y",
    "3:2:1.2201": "Y",
    "3:2:1.2202": "Y",
    "3:2:1.221.": "Y",
    "3:2:1.2210": "Y",
    "3:2:1.2211": "Y",
    "3:2:1.2212": "Y",
    "3:2:1.222.": "N",
    "3:2:1.2220": "Y",
    "3:2:1.2221": "Y",
    "3:2:1.2222": "Y",
    "3:2:10.2..": "N",
    "3:2:10.2.0": "Y",
    "3:2:10.2.1": "N",
    "3:2:10.2.2": "N",
    "3:2:10.20.": "Y",
    "3:2:10.200": "Y",
    "3:2:10.201": "Y",
    "3:2:10.202": "Y",
    "3:2:10.21.": "Y",
    "3:2:10.210": "Y",
    "3:2:10.211": "Y",
    "3:2:10.212": "Y",
    "3:2:10.22.": "N",
    "3:2:10.220": "Y",
    "3:2:10.221": "E",
    "3:2:10.222": "Y",
    "3:2:1002..": "Y",
    "3:2:1002.0": "Y",
    "3:2:1002.1": "Y",
    "3:2:1002.2": "Y",
    "3:2:10020.": "Y",
    "3:2:10021.": "Y",
    "3:2:10022.": "Y",
    "3:2:1012..": "N",
    "3:2:1012.0": "Y",
    "3:2:1012.1": "E",
    "3:2:1012.2": "N",
    "3:2:10120.": "Y",
    "3:2:10121.": "Y",
    "3:2:10122.": "N",
    "3:2:102...": "N",
    "3:2:102..0": "Y",
    "3:2:102..1": "Y",
    "3:2:102..2": "N",
    "3:2:102.0.": "Y",
    "3:2:102.00": "Y",
    "3:2:102.01": "Y",
    "3:2:102.02": "Y",
    "3:2:102.1.": "N",
    "3:2:102.10": "Y",
    "3:2:102.11": "Y",
    "3:2:102.12": "Y",
    "3:2:102.2.": "N",
    "3:2:102.20": "Y",
    "3:2:102.21": "Y",
    "3:2:102.22": "Y",
    "3:2:1020..": "Y",
    "3:2:1020.0": "Y",
    "3:2:1020.1": "Y",
    "3:2:1020.2": "Y",
    "3:2:10200.": "Y",
    "3:2:10201.": "Y",
    "3:2:10202.": "Y",
    "3:2:1021..": "N",
    "3:2:1021.0": "Y",
    "3:2:1021.1": "Y",
    "3:2:1021.2": "N",
    "3:2:10210.": "Y",
    "3:2:10211.": "Y",
    "3:2:10212.": "N",
    "3:2:1022..": "N",
    "3:2:1022.0": "Y",
    "3:2:1022.1": "Y",
    "3:2:1022.2": "N",
    "3:2:10220.": "Y",
    "3:2:10221.": "Y",
    "3:2:10222.": "N",
    "3:2:11.2..": "N",
    "3:2:11.2.0": "Y",
    "3:2:11.2.1": "N",
    "3:2:11.2.2": "N",
    "3:2:11.20.": "Y",
    "3:2:11.200": "Y",
    "3:2:11.201": "Y",
    "3:2:11.202": "Y",
    "3:2:11.21.": "Y",
    "3:2:11.210": "Y",
    "3:2:11.211": "Y",
    "3:2:11.212": "Y",
    "3:2:11.22.": "N",
    "3:2:11.220": "Y",
    "3:2:11.221": "E",
    "3:2:11.222": "Y",
    "3:2:1102..": "Y",
    "3:2:1102.0": "Y",
    "3:2:1102.1": "Y",
    "3:2:1102.2": "Y",
    "3:2:11020.": "Y",
    "3:2:11021.": "Y",
    "3:2:11022.": "Y",
    "3:2:1112..": "N",
    "3:2:1112.0": "Y",
    "3:2:1112.1": "E",
    "3:2:1112.2": "N",
    "3:2:11120.": "Y",
    "3:2:11121.": "Y",
    "3:2:11122.": "N",
    "3:2:112...": "N",
    "3:2:112..0": "Y",
    "3:2:112..1": "Y",
    "3:2:112..2": "N",
    "3:2:112.0.": "Y",
    "3:2:112.00": "Y",
    "3:2:112.01": "Y",
    "3:2:112.02": "Y",
    "3:2:112.1.": "N",
    "3:2:112.10": "Y",
    "3:2:112.11": "Y",
    "3:2:112.12": "Y",
    "3:2:112.2.": "N",
    "3:2:112.20": "Y",
    "3:2:112.21": "Y",
    "3:2:112.22": "Y",
    "3:2:1120..": "Y",
    "3:2:1120.0": "Y",
    "3:2:1120.1": "Y",
    "3:2:1120.2": "Y",
    "3:2:11200.": "Y",
    "3:2:11201.": "Y",
    "3:2:11202.": "Y",
    "3:2:1121..": "N",
    "3:2:1121.0": "Y",
    "3:2:1121.1": "Y",
    "3:2:1121.2": "N",
    "3:2:11210.": "Y",
    "3:2:11211.": "Y",
    "3:2:11212.": "N",
    "3:2:1122..": "N",
    "3:2:1122.0": "Y",
    "3:2:1122.1": "Y",
    "3:2:1122.2": "N",
    "3:2:11220.": "Y",
    "3:2:11221.": "Y",
    "3:2:11222.": "N",
    "3:2:12.0..": "Y",
    "3:2:12.0.0": "Y",
    "3:2:12.0.1": "Y",
    "3:2:12.0.2": "Y",
    "3:2:12.00.": "Y",
    "3:2:12.000": "Y",
    "3:2:12.001": "Y",
    "3:2:12.002": "Y",
    "3:2:12.01.": "Y",
    "3:2:12.010": "Y",
    "3:2:12.011": "Y",
    "3:2:12.012": "Y",
    "3:2:12.02.": "Y",
    "3:2:12.020": "Y",
    "3:2:12.021": "Y",
    "3:2:12.022": "Y",
    "3:2:12.2..": "N",
    "3:2:12.2.0": "E",
    "3:2:12.2.1": "N",
    "3:2:12.2.2": "N",
    "3:2:12.20.": "Y",
    "3:2:12.200": "Y",
    "3:2:12.201": "Y",
    "3:2:12.202": "Y",
    "3:2:12.21.": "Y",
    "3:2:12.210": "Y",
    "3:2:12.211": "Y",
    "3:2:12.212": "Y",
    "3:2:12.22.": "N",
    "3:2:12.220": "Y",
    "3:2:12.221": "E",
    "3:2:12.222": "Y",
    "3:2:120...": "N",
    "3:2:120..0": "E",
    "3:2:120..1": "E",
    "3:2:120..2": "N",
    "3:2:120.0.": "Y",
    "3:2:120.00": "Y",
    "3:2:120.01": "Y",
    "3:2:120.02": "Y",
    "3:2:120.1.": "Y",
    "3:2:120.10": "Y",
    "3:2:120.11": "Y",
    "3:2:120.12": "Y",
    "3:2:120.2.": "N",
    "3:2:120.20": "Y",
    "3:2:120.21": "Y",
    "3:2:120.22": "Y",
    "3:2:1200..": "Y",
    "3:2:1200.0": "Y",
    "3:2:1200.1": "Y",
    "3:2:1200.2": "Y",
    "3:2:12000.": "Y",
    "3:2:12001.": "Y",
    "3:2:12002.": "Y",
    "3:2:1201..": "Y",
    "3:2:1201.0": "Y",
    "3:2:1201.1": "Y",
    "3:2:1201.2": "Y",
    "3:2:12010.": "Y",
    "3:2:12011.": "Y",
    "3:2:12012.": "Y",
    "3:2:1202..": "N",
    "3:2:1202.0": "E",
    "3:2:1202.1": "E",
    "3:2:1202.2": "N",
    "3:2:12020.": "Y",
    "3:2:12021.": "Y",
    "3:2:12022.": "N",
    "3:2:1210..": "Y",
    "3:2:1210.0": "Y",
    "3:2:1210.1": "Y",
    "3:2:1210.2": "Y",
    "3:2:12100.": "Y",
    "3:2:12101.": "Y",
    "3:2:12102.": "Y",
    "3:2:1212..": "N",
    "3:2:1212.0": "E",
    "3:2:1212.1": "E",
    "3:2:1212.2": "N",
    "3:2:12120.": "Y",
    "3:2:12121.": "Y",
    "3:2:12122.": "N",
    "3:2:122...": "N",
    "3:2:122..0": "Y",
    "3:2:122..1": "Y",
    "3:2:122..2": "N",
    "3:2:122.0.": "Y",
    "3:2:122.00": "Y",
    "3:2:122.01": "Y",
    "3:2:122.02": "Y",
    "3:2:122.1.": "N",
    "3:2:122.10": "Y",
    "3:2:122.11": "Y",
    "3:2:122.12": "Y",
    "3:2:122.2.": "N",
    "3:2:122.20": "Y",
    "3:2:122.21": "Y",
    "3:2:122.22": "Y",
    "3:2:1220..": "Y",
    "3:2:1220.0": "Y",
    "3:2:1220.1": "Y",
    "3:2:1220.2": "Y",
    "3:2:12200.": "Y",
    "3:2:12201.": "Y",
    "3:2:12202.": "Y",
    "3:2:1221..": "N",
    "3:2:1221.0": "Y",
    "3:2:1221.1": "Y",
    "3:2:1221.2": "N",
    "3:2:12210.": "Y",
    "3:2:12211.": "Y",
    "3:2:12212.": "N",
    "3:2:1222..": "N",
    "3:2:1222.0": "Y",
    "3:2:1222.1": "Y",
    "3:2:1222.2": "N",
    "3:2:12220.": "Y",
    "3:2:12221.": "Y",
    "3:2:12222.": "N",
}

CASE2_RULES: dict[str, str] = {
    "2:0:.1.0": "N",
    "2:0:.10.": "PD1",
    "2:0:.100": "Y",
    "2:0:.101": "Y",
    "2:0:.110": "O",
    "2:0:01.0": "O",
    "2:0:010.": "PD1",
    "2:0:1..0": "PD1",
    "2:0:1.0.": "N",
    "2:0:1.00": "PD1",
    "2:0:1.01": "Y",
    "2:0:1.10": "PD1",
    "2:0:10.0": "Y",
    "2:0:100.": "Y",
    "2:0:11.0": "Y",
    "2:0:110.": "PD1",
    "2:1:.1..": "N",
    "2:1:.1.0": "N",
    "2:1:.1.1": "N",
    "2:1:.10.": "PD1",
    "2:1:.100": "Y",
    "2:1:.101": "Y",
    "2:1:.11.": "N",
    "2:1:.110": "O",
    "2:1:.111": "Y",
    "2:1:01..": "N",
    "2:1:01.0": "O",
    "2:1:01.1": "N",
    "2:1:010.": "PD1",
    "2:1:011.": "N",
    "2:1:1...": "N",
    "2:1:1..0": "PD1",
    "2:1:1..1": "N",
    "2:1:1.0.": "N",
    "2:1:1.00": "PD1",
    "2:1:1.01": "Y",
    "2:1:1.1.": "N",
    "2:1:1.10": "PD1",
    "2:1:1.11": "Y",
    "2:1:10..": "N",
    "2:1:10.0": "Y",
    "2:1:10.1": "N",
    "2:1:100.": "Y",
    "2:1:101.": "N",
    "2:1:11..": "N",
    "2:1:11.0": "Y",
    "2:1:11.1": "N",
    "2:1:110.": "PD1",
    "2:1:111.": "N",
    "3:0:.1.2.0": "N",
    "3:0:.1.20.": "PD2",
    "3:0:.1.200": "Y",
    "3:0:.1.201": "O",
    "3:0:.1.202": "Y",
    "3:0:.1.210": "Y",
    "3:0:.1.220": "NR3:12",
    "3:0:.102.0": "Y",
    "3:0:.102.1": "Y",
    "3:0:.1020.": "Y",
    "3:0:.10200": "Y",
    "3:0:.10201": "Y",
    "3:0:.10202": "Y",
    "3:0:.1021.": "Y",
    "3:0:.10210": "Y",
    "3:0:.10211": "Y",
    "3:0:.10212": "Y",
    "3:0:.10220": "Y",
    "3:0:.10221": "Y",
    "3:0:.112.0": "NR3:12",
    "3:0:.1120.": "NPO|PD2",
    "3:0:.11200": "Y",
    "3:0:.11201": "Y",
    "3:0:.11202": "Y",
    "3:0:.11210": "Y",
    "3:0:.11220": "NR3:12",
    "3:0:.12..0": "PD2",
    "3:0:.12.0.": "PD1",
    "3:0:.12.00": "Y",
    "3:0:.12.01": "PD1",
    "3:0:.12.02": "Y",
    "3:0:.12.10": "PD2",
    "3:0:.12.20": "PD2",
    "3:0:.120.0": "O",
    "3:0:.120.1": "Y",
    "3:0:.1200.": "Y",
    "3:0:.12000": "Y",
    "3:0:.12001": "Y",
    "3:0:.12002": "Y",
    "3:0:.1201.": "O",
    "3:0:.12010": "O",
    "3:0:.12011": "Y",
    "3:0:.12012": "Y",
    "3:0:.12020": "O",
    "3:0:.12021": "Y",
    "3:0:.121.0": "Y",
    "3:0:.1210.": "Y",
    "3:0:.12100": "Y",
    "3:0:.12101": "Y",
    "3:0:.12102": "Y",
    "3:0:.12110": "Y",
    "3:0:.12120": "Y",
    "3:0:.122.0": "Y",
    "3:0:.1220.": "Y",
    "3:0:.12200": "Y",
    "3:0:.12201": "Y",
    "3:0:.12202": "Y",
    "3:0:.12210": "Y",
    "3:0:.12220": "Y",
    "3:0:01.2.0": "NR3:12",
    "3:0:01.20.": "PD2",
    "3:0:01.200": "Y",
    "3:0:01.201": "O",
    "3:0:01.202": "Y",
    "3:0:01.210": "Y",
    "3:0:01.220": "NR3:12",
    "3:0:0102.0": "Y",
    "3:0:0102.1": "Y",
    "3:0:01020.": "Y",
    "3:0:01021.": "Y",
    "3:0:0112.0": "NR3:12",
    "3:0:01120.": "NPO|PD2",
    "3:0:012..0": "NPO|PD2",
    "3:0:012.0.": "PD1",
    "3:0:012.00": "Y",
    "3:0:012.01": "PD1",
    "3:0:012.02": "Y",
    "3:0:012.10": "NPO|PD2",
    "3:0:012.20": "NPO|PD2",
    "3:0:0120.0": "Y",
    "3:0:0120.1": "Y",
    "3:0:01200.": "Y",
    "3:0:01201.": "Y",
    "3:0:0121.0": "Y",
    "3:0:01210.": "Y",
    "3:0:0122.0": "Y",
    "3:0:01220.": "Y",
    "3:0:1..2.0": "PD2",
    "3:0:1..20.": "PD1",
    "3:0:1..200": "Y",
    "3:0:1..201": "Y",
    "3:0:1..202": "Y",
    "3:0:1..210": "Y",
    "3:0:1..220": "NPO|PD2",
    "3:0:1.02.0": "PD2",
    "3:0:1.02.1": "O",
    "3:0:1.020.": "PD1",
    "3:0:1.0200": "Y",
    "3:0:1.0201": "Y",
    "3:0:1.0202": "Y",
    "3:0:1.021.": "PD1",
    "3:0:1.0210": "Y",
    "3:0:1.0211": "Y",
    "3:0:1.0212": "Y",
    "3:0:1.0220": "NPO|PD2",
    "3:0:1.0221": "Y",
    "3:0:1.12.0": "PD2",
    "3:0:1.120.": "PD1",
    "3:0:1.1200": "Y",
    "3:0:1.1201": "Y",
    "3:0:1.1202": "Y",
    "3:0:1.1210": "Y",
    "3:0:1.1220": "NPO|PD2",
    "3:0:1.2..0": "PD1",
    "3:0:1.2.0.": "N",
    "3:0:1.2.00": "PD1",
    "3:0:1.2.01": "PD1",
    "3:0:1.2.02": "Y",
    "3:0:1.2.10": "PD1",
    "3:0:1.2.20": "PD1",
    "3:0:1.20.0": "PD1",
    "3:0:1.20.1": "Y",
    "3:0:1.200.": "PD1",
    "3:0:1.2000": "PD1",
    "3:0:1.2001": "Y",
    "3:0:1.2002": "Y",
    "3:0:1.201.": "PD1",
    "3:0:1.2010": "PD1",
    "3:0:1.2011": "Y",
    "3:0:1.2012": "Y",
    "3:0:1.2020": "PD1",
    "3:0:1.2021": "Y",
    "3:0:1.21.0": "Y",
    "3:0:1.210.": "Y",
    "3:0:1.2100": "Y",
    "3:0:1.2101": "Y",
    "3:0:1.2102": "Y",
    "3:0:1.2110": "Y",
    "3:0:1.2120": "Y",
    "3:0:1.22.0": "Y",
    "3:0:1.220.": "PD1",
    "3:0:1.2200": "Y",
    "3:0:1.2201": "Y",
    "3:0:1.2202": "Y",
    "3:0:1.2210": "Y",
    "3:0:1.2220": "Y",
    "3:0:10.2.0": "Y",
    "3:0:10.20.": "Y",
    "3:0:10.200": "Y",
    "3:0:10.201": "Y",
    "3:0:10.202": "Y",
    "3:0:10.210": "Y",
    "3:0:10.220": "Y",
    "3:0:1002.0": "Y",
    "3:0:1002.1": "Y",
    "3:0:10020.": "Y",
    "3:0:10021.": "Y",
    "3:0:1012.0": "Y",
    "3:0:10120.": "Y",
    "3:0:102..0": "Y",
    "3:0:102.0.": "Y",
    "3:0:102.00": "Y",
    "3:0:102.01": "Y",
    "3:0:102.02": "Y",
    "3:0:102.10": "Y",
    "3:0:102.20": "Y",
    "3:0:1020.0": "Y",
    "3:0:1020.1": "Y",
    "3:0:10200.": "Y",
    "3:0:10201.": "Y",
    "3:0:1021.0": "Y",
    "3:0:10210.": "Y",
    "3:0:1022.0": "Y",
    "3:0:10220.": "Y",
    "3:0:11.2.0": "Y",
    "3:0:11.20.": "Y",
    "3:0:11.200": "Y",
    "3:0:11.201": "Y",
    "3:0:11.202": "Y",
    "3:0:11.210": "Y",
    "3:0:11.220": "Y",
    "3:0:1102.0": "Y",
    "3:0:1102.1": "Y",
    "3:0:11020.": "Y",
    "3:0:11021.": "Y",
    "3:0:1112.0": "Y",
    "3:0:11120.": "Y",
    "3:0:112..0": "Y",
    "3:0:112.0.": "PD1",
    "3:0:112.00": "Y",
    "3:0:112.01": "PD1",
    "3:0:112.02": "Y",
    "3:0:112.10": "Y",
    "3:0:112.20": "Y",
    "3:0:1120.0": "Y",
    "3:0:1120.1": "Y",
    "3:0:11200.": "Y",
    "3:0:11201.": "Y",
    "3:0:1121.0": "Y",
    "3:0:11210.": "Y",
    "3:0:1122.0": "Y",
    "3:0:11220.": "Y",
    "3:0:12.0.0": "Y",
    "3:0:12.0.1": "Y",
    "3:0:12.00.": "Y",
    "3:0:12.000": "Y",
    "3:0:12.001": "Y",
    "3:0:12.002": "Y",
    "3:0:12.01.": "Y",
    "3:0:12.010": "Y",
    "3:0:12.011": "Y",
    "3:0:12.012": "Y",
    "3:0:12.020": "Y",
    "3:0:12.021": "Y",
    "3:0:12.2.0": "O",
    "3:0:12.20.": "PD1",
    "3:0:12.200": "Y",
    "3:0:12.201": "Y",
    "3:0:12.202": "Y",
    "3:0:12.210": "Y",
    "3:0:12.220": "Y",
    "3:0:120..0": "O",
    "3:0:120..1": "PD2",
    "3:0:120.0.": "PD1",
    "3:0:120.00": "Y",
    "3:0:120.01": "Y",
    "3:0:120.02": "Y",
    "3:0:120.1.": "PD1",
    "3:0:120.10": "Y",
    "3:0:120.11": "Y",
    "3:0:120.12": "Y",
    "3:0:120.20": "Y",
    "3:0:120.21": "NPO|PD2",
    "3:0:1200.0": "Y",
    "3:0:1200.1": "Y",
    "3:0:12000.": "Y",
    "3:0:12001.": "Y",
    "3:0:1201.0": "Y",
    "3:0:1201.1": "Y",
    "3:0:12010.": "Y",
    "3:0:12011.": "Y",
    "3:0:1202.0": "O",
    "3:0:1202.1": "O",
    "3:0:12020.": "PD1",
    "3:0:12021.": "PD1",
    "3:0:1210.0": "Y",
    "3:0:1210.1": "Y",
    "3:0:12100.": "Y",
    "3:0:12101.": "Y",
    "3:0:1212.0": "O",
    "3:0:12120.": "PD1",
    "3:0:122..0": "Y",
    "3:0:122.0.": "PD1",
    "3:0:122.00": "Y",
    "3:0:122.01": "Y",
    "3:0:122.02": "Y",
    "3:0:122.10": "Y",
    "3:0:122.20": "Y",
    "3:0:1220.0": "Y",
    "3:0:1220.1": "Y",
    "3:0:12200.": "Y",
    "3:0:12201.": "Y",
    "3:0:1221.0": "Y",
    "3:0:12210.": "Y",
    "3:0:1222.0": "Y",
    "3:0:12220.": "PD1",
    "3:1:.1.2.0": "N",
    "3:1:.1.2.1": "N",
    "3:1:.1.20.": "PD2",
    "3:1:.1.200": "Y",
    "3:1:.1.201": "O",
    "3:1:.1.202": "Y",
    "3:1:.1.21.": "PD1",
    "3:1:.1.210": "Y",
    "3:1:.1.211": "Y",
    "3:1:.1.212": "Y",
    "3:1:.1.220": "NR3:12",
    "3:1:.1.221": "O",
    "3:1:.102.0": "Y",
    "3:1:.102.1": "Y",
    "3:1:.1020.": "Y",
    "3:1:.10200": "Y",
    "3:1:.10201": "Y",
    "3:1:.10202": "Y",
    "3:1:.1021.": "Y",
    "3:1:.10210": "Y",
    "3:1:.10211": "Y",
    "3:1:.10212": "Y",
    "3:1:.10220": "Y",
    "3:1:.10221": "Y",
    "3:1:.112.0": "NR3:12",
    "3:1:.112.1": "O",
    "3:1:.1120.": "NPO|PD2",
    "3:1:.11200": "Y",
    "3:1:.11201": "Y",
    "3:1:.11202": "Y",
    "3:1:.1121.": "PD1",
    "3:1:.11210": "Y",
    "3:1:.11211": "Y",
    "3:1:.11212": "Y",
    "3:1:.11220": "NR3:12",
    "3:1:.11221": "Y",
    "3:1:.12..0": "PD2",
    "3:1:.12..1": "PD1",
    "3:1:.12.0.": "PD1",
    "3:1:.12.00": "Y",
    "3:1:.12.01": "PD1",
    "3:1:.12.02": "Y",
    "3:1:.12.1.": "N",
    "3:1:.12.10": "PD2",
    "3:1:.12.11": "PD1",
    "3:1:.12.12": "Y",
    "3:1:.12.20": "PD2",
    "3:1:.12.21": "PD1",
    "3:1:.120.0": "O",
    "3:1:.120.1": "Y",
    "3:1:.1200.": "Y",
    "3:1:.12000": "Y",
    "3:1:.12001": "Y",
    "3:1:.12002": "Y",
    "3:1:.1201.": "O",
    "3:1:.12010": "O",
    "3:1:.12011": "Y",
    "3:1:.12012": "Y",
    "3:1:.12020": "O",
    "3:1:.12021": "Y",
    "3:1:.121.0": "Y",
    "3:1:.121.1": "Y",
    "3:1:.1210.": "Y",
    "3:1:.12100": "Y",
    "3:1:.12101": "Y",
    "3:1:.12102": "Y",
    "3:1:.1211.": "Y",
    "3:1:.12110": "Y",
    "3:1:.12111": "Y",
    "3:1:.12112": "Y",
    "3:1:.12120": "Y",
    "3:1:.12121": "Y",
    "3:1:.122.0": "Y",
    "3:1:.122.1": "Y",
    "3:1:.1220.": "Y",
    "3:1:.12200": "Y",
    "3:1:.12201": "Y",
    "3:1:.12202": "Y",
    "3:1:.1221.": "PD1",
    "3:1:.12210": "Y",
    "3:1:.12211": "Y",
    "3:1:.12212": "Y",
    "3:1:.12220": "Y",
    "3:1:.12221": "Y",
    "3:1:01.2.0": "NR3:12",
    "3:1:01.2.1": "N",
    "3:1:01.20.": "PD2",
    "3:1:01.200": "Y",
    "3:1:01.201": "O",
    "3:1:01.202": "Y",
    "3:1:01.21.": "PD1",
    "3:1:01.210": "Y",
    "3:1:01.211": "Y",
    "3:1:01.212": "Y",
    "3:1:01.220": "NR3:12",
    "3:1:01.221": "O",
    "3:1:0102.0": "Y",
    "3:1:0102.1": "Y",
    "3:1:01020.": "Y",
    "3:1:01021.": "Y",
    "3:1:0112.0": "NR3:12",
    "3:1:0112.1": "O",
    "3:1:01120.": "NPO|PD2",
    "3:1:01121.": "PD1",
    "3:1:012..0": "NPO|PD2",
    "3:1:012..1": "PD1",
    "3:1:012.0.": "PD1",
    "3:1:012.00": "Y",
    "3:1:012.01": "PD1",
    "3:1:012.02": "Y",
    "3:1:012.1.": "N",
    "3:1:012.10": "NPO|PD2",
    "3:1:012.11": "PD1",
    "3:1:012.12": "Y",
    "3:1:012.20": "NPO|PD2",
    "3:1:012.21": "PD1",
    "3:1:0120.0": "Y",
    "3:1:0120.1": "Y",
    "3:1:01200.": "Y",
    "3:1:01201.": "Y",
    "3:1:0121.0": "Y",
    "3:1:0121.1": "Y",
    "3:1:01210.": "Y",
    "3:1:01211.": "Y",
    "3:1:0122.0": "Y",
    "3:1:0122.1": "Y",
    "3:1:01220.": "Y",
    "3:1:01221.": "PD1",
    "3:1:1..2.0": "PD2",
    "3:1:1..2.1": "N",
    "3:1:1..20.": "PD1",
    "3:1:1..200": "Y",
    "3:1:1..201": "Y",
    "3:1:1..202": "Y",
    "3:1:1..21.": "PD1",
    "3:1:1..210": "Y",
    "3:1:1..211": "Y",
    "3:1:1..212": "Y",
    "3:1:1..220": "NPO|PD2",
    "3:1:1..221": "O",
    "3:1:1.02.0": "PD2",
    "3:1:1.02.1": "O",
    "3:1:1.020.": "PD1",
    "3:1:1.0200": "Y",
    "3:1:1.0201": "Y",
    "3:1:1.0202": "Y",
    "3:1:1.021.": "PD1",
    "3:1:1.0210": "Y",
    "3:1:1.0211": "Y",
    "3:1:1.0212": "Y",
    "3:1:1.0220": "NPO|PD2",
    "3:1:1.0221": "Y",
    "3:1:1.12.0": "PD2",
    "3:1:1.12.1": "O",
    "3:1:1.120.": "PD1",
    "3:1:1.1200": "Y",
    "3:1:1.1201": "Y",
    "3:1:1.1202": "Y",
    "3:1:1.121.": "PD1",
    "3:1:1.1210": "Y",
    "3:1:1.1211": "Y",
    "3:1:1.1212": "Y",
    "3:1:1.1220": "NPO|PD2",
    "3:1:1.1221": "Y",
    "3:1:1.2..0": "PD1",
    "3:1:1.2..1": "PD1",
    "3:1:1.2.0.": "N",
    "3:1:1.2.00": "PD1",
    "3:1:1.2.01": "PD1",
    "3:1:1.2.02": "Y",
    "3:1:1.2.1.": "N",
    "3:1:1.2.10": "PD1",
    "3:1:1.2.11": "PD1",
    "3:1:1.2.12": "Y",
    "3:1:1.2.20": "PD1",
    "3:1:1.2.21": "PD1",
    "3:1:1.20.0": "PD1",
    "3:1:1.20.1": "Y",
    "3:1:1.200.": "PD1",
    "3:1:1.2000": "PD1",
    "3:1:1.2001": "Y",
    "3:1:1.2002": "Y",
    "3:1:1.201.": "PD1",
    "3:1:1.2010": "PD1",
    "3:1:1.2011": "Y",
    "3:1:1.2012": "Y",
    "3:1:1.2020": "PD1",
    "3:1:1.2021": "Y",
    "3:1:1.21.0": "Y",
    "3:1:1.21.1": "Y",
    "3:1:1.210.": "Y",
    "3:1:1.2100": "Y",
    "3:1:1.2101": "Y",
    "3:1:1.2102": "Y",
    "3:1:1.211.": "Y",
    "3:1:1.2110": "Y",
    "3:1:1.2111": "Y",
    "3:1:1.2112": "Y",
    "3:1:1.2120": "Y",
    "3:1:1.2121": "Y",
    "3:1:1.22.0": "Y",
    "3:1:1.22.1": "Y",
    "3:1:1.220.": "PD1",
    "3:1:1.2200": "Y",
    "3:1:1.2201": "Y",
    "3:1:1.2202": "Y",
    "3:1:1.221.": "PD1",
    "3:1:1.2210": "Y",
    "3:1:1.2211": "Y",
    "3:1:1.2212": "Y",
    "3:1:1.2220": "Y",
    "3:1:1.2221": "Y",
    "3:1:10.2.0": "Y",
    "3:1:10.2.1": "N",
    "3:1:10.20.": "Y",
    "3:1:10.200": "Y",
    "3:1:10.201": "Y",
    "3:1:10.202": "Y",
    "3:1:10.21.": "PD1",
    "3:1:10.210": "Y",
    "3:1:10.211": "Y",
    "3:1:10.212": "Y",
    "3:1:10.220": "Y",
    "3:1:10.221": "O",
    "3:1:1002.0": "Y",
    "3:1:1002.1": "Y",
    "3:1:10020.": "Y",
    "3:1:10021.": "Y",
    "3:1:1012.0": "Y",
    "3:1:1012.1": "O",
    "3:1:10120.": "Y",
    "3:1:10121.": "PD1",
    "3:1:102..0": "Y",
    "3:1:102..1": "PD1",
    "3:1:102.0.": "Y",
    "3:1:102.00": "Y",
    "3:1:102.01": "Y",
    "3:1:102.02": "Y",
    "3:1:102.1.": "N",
    "3:1:102.10": "Y",
    "3:1:102.11": "PD1",
    "3:1:102.12": "Y",
    "3:1:102.20": "Y",
    "3:1:102.21": "PD1",
    "3:1:1020.0": "Y",
    "3:1:1020.1": "Y",
    "3:1:10200.": "Y",
    "3:1:10201.": "Y",
    "3:1:1021.0": "Y",
    "3:1:1021.1": "Y",
    "3:1:10210.": "Y",
    "3:1:10211.": "Y",
    "3:1:1022.0": "Y",
    "3:1:1022.1": "Y",
    "3:1:10220.": "Y",
    "3:1:10221.": "PD1",
    "3:1:11.2.0": "Y",
    "3:1:11.2.1": "N",
    "3:1:11.20.": "Y",
    "3:1:11.200": "Y",
    "3:1:11.201": "Y",
    "3:1:11.202": "Y",
    "3:1:11.21.": "PD1",
    "3:1:11.210": "Y",
    "3:1:11.211": "Y",
    "3:1:11.212": "Y",
    "3:1:11.220": "Y",
    "3:1:11.221": "O",
    "3:1:1102.0": "Y",
    "3:1:1102.1": "Y",
    "3:1:11020.": "Y",
    "3:1:11021.": "Y",
    "3:1:1112.0": "Y",
    "3:1:1112.1": "O",
    "3:1:11120.": "Y",
    "3:1:11121.": "PD1",
    "3:1:112..0": "Y",
    "3:1:112..1": "PD1",
    "3:1:112.0.": "PD1",
    "3:1:112.00": "Y",
    "3:1:112.01": "PD1",
    "3:1:112.02": "Y",
    "3:1:112.1.": "N",
    "3:1:112.10": "Y",
    "3:1:112.11": "PD1",
    "3:1:112.12": "Y",
    "3:1:112.20": "Y",
    "3:1:112.21": "PD1",
    "3:1:1120.0": "Y",
    "3:1:1120.1": "Y",
    "3:1:11200.": "Y",
    "3:1:11201.": "Y",
    "3:1:1121.0": "Y",
    "3:1:1121.1": "Y",
    "3:1:11210.": "Y",
    "3:1:11211.": "Y",
    "3:1:1122.0": "Y",
    "3:1:1122.1": "Y",
    "3:1:11220.": "Y",
    "3:1:11221.": "PD1",
    "3:1:12...0": "N",
    "3:1:12...1": "N",
    "3:1:12..0.": "PD1",
    "3:1:12..00": "Y",
    "3:1:12..01": "PD1",
    "3:1:12..02": "Y",
    "3:1:12..1.": "N",
    "3:1:12..10": "N",
    "3:1:12..11": "N",
    "3:1:12..12": "N",
    "3:1:12..20": "O",
    "3:1:12..21": "N",
    "3:1:12.0.0": "Y",
    "3:1:12.0.1": "Y",
    "3:1:12.00.": "Y",
    "3:1:12.000": "Y",
    "3:1:12.001": "Y",
    "3:1:12.002": "Y",
    "3:1:12.01.": "Y",
    "3:1:12.010": "Y",
    "3:1:12.011": "Y",
    "3:1:12.012": "Y",
    "3:1:12.020": "Y",
    "3:1:12.021": "Y",
    "3:1:12.1.0": "N",
    "3:1:12.1.1": "N",
    "3:1:12.10.": "PD1",
    "3:1:12.100": "Y",
    "3:1:12.101": "PD1",
    "3:1:12.102": "Y",
    "3:1:12.11.": "N",
    "3:1:12.110": "N",
    "3:1:12.111": "N",
    "3:1:12.112": "N",
    "3:1:12.120": "O",
    "3:1:12.121": "N",
    "3:1:12.2.0": "O",
    "3:1:12.2.1": "N",
    "3:1:12.20.": "PD1",
    "3:1:12.200": "Y",
    "3:1:12.201": "Y",
    "3:1:12.202": "Y",
    "3:1:12.21.": "PD1",
    "3:1:12.210": "Y",
    "3:1:12.211": "Y",
    "3:1:12.212": "Y",
    "3:1:12.220": "Y",
    "3:1:12.221": "O",
    "3:1:120..0": "O",
    "3:1:120..1": "PD2",
    "3:1:120.0.": "PD1",
    "3:1:120.00": "Y",
    "3:1:120.01": "Y",
    "3:1:120.02": "Y",
    "3:1:120.1.": "PD1",
    "3:1:120.10": "Y",
    "3:1:120.11": "Y",
    "3:1:120.12": "Y",
    "3:1:120.20": "Y",
    "3:1:120.21": "NPO|PD2",
    "3:1:1200.0": "Y",
    "3:1:1200.1": "Y",
    "3:1:12000.": "Y",
    "3:1:12001.": "Y",
    "3:1:1201.0": "Y",
    "3:1:1201.1": "Y",
    "3:1:12010.": "Y",
    "3:1:12011.": "Y",
    "3:1:1202.0": "O",
    "3:1:1202.1": "O",
    "3:1:12020.": "PD1",
    "3:1:12021.": "PD1",
    "3:1:121..0": "N",
    "3:1:121..1": "N",
    "3:1:121.0.": "PD1",
    "3:1:121.00": "Y",
    "3:1:121.01": "PD1",
    "3:1:121.02": "Y",
    "3:1:121.1.": "N",
    "3:1:121.10": "N",
    "3:1:121.11": "N",
    "3:1:121.12": "N",
    "3:1:121.20": "O",
    "3:1:121.21": "N",
    "3:1:1210.0": "Y",
    "3:1:1210.1": "Y",
    "3:1:12100.": "Y",
    "3:1:12101.": "Y",
    "3:1:1211.0": "Y",
    "3:1:1211.1": "Y",
    "3:1:12110.": "Y",
    "3:1:12111.": "Y",
    "3:1:1212.0": "O",
    "3:1:1212.1": "O",
    "3:1:12120.": "PD1",
    "3:1:12121.": "PD1",
    "3:1:122..0": "Y",
    "3:1:122..1": "PD1",
    "3:1:122.0.": "PD1",
    "3:1:122.00": "Y",
    "3:1:122.01": "Y",
    "3:1:122.02": "Y",
    "3:1:122.1.": "N",
    "3:1:122.10": "Y",
    "3:1:122.11": "PD1",
    "3:1:122.12": "Y",
    "3:1:122.20": "Y",
    "3:1:122.21": "PD1",
    "3:1:1220.0": "Y",
    "3:1:1220.1": "Y",
    "3:1:12200.": "Y",
    "3:1:12201.": "Y",
    "3:1:1221.0": "Y",
    "3:1:1221.1": "Y",
    "3:1:12210.": "Y",
    "3:1:12211.": "Y",
    "3:1:1222.0": "Y",
    "3:1:1222.1": "Y",
    "3:1:12220.": "PD1",
    "3:1:12221.": "PD1",
    "3:2:.1.2..": "N",
    "3:2:.1.2.0": "N",
    "3:2:.1.2.1": "N",
    "3:2:.1.2.2": "N",
    "3:2:.1.20.": "PD2",
    "3:2:.1.200": "Y",
    "3:2:.1.201": "O",
    "3:2:.1.202": "Y",
    "3:2:.1.21.": "PD1",
    "3:2:.1.210": "Y",
    "3:2:.1.211": "Y",
    "3:2:.1.212": "Y",
    "3:2:.1.22.": "N",
    "3:2:.1.220": "NR3:12",
    "3:2:.1.221": "O",
    "3:2:.1.222": "Y",
    "3:2:.102..": "PD1",
    "3:2:.102.0": "Y",
    "3:2:.102.1": "Y",
    "3:2:.102.2": "PD1",
    "3:2:.1020.": "Y",
    "3:2:.10200": "Y",
    "3:2:.10201": "Y",
    "3:2:.10202": "Y",
    "3:2:.1021.": "Y",
    "3:2:.10210": "Y",
    "3:2:.10211": "Y",
    "3:2:.10212": "Y",
    "3:2:.1022.": "PD1",
    "3:2:.10220": "Y",
    "3:2:.10221": "Y",
    "3:2:.10222": "Y",
    "3:2:.112..": "N",
    "3:2:.112.0": "NR3:12",
    "3:2:.112.1": "O",
    "3:2:.112.2": "N",
    "3:2:.1120.": "NPO|PD2",
    "3:2:.11200": "Y",
    "3:2:.11201": "Y",
    "3:2:.11202": "Y",
    "3:2:.1121.": "PD1",
    "3:2:.11210": "Y",
    "3:2:.11211": "Y",
    "3:2:.11212": "Y",
    "3:2:.1122.": "N",
    "3:2:.11220": "NR3:12",
    "3:2:.11221": "Y",
    "3:2:.11222": "Y",
    "3:2:.12...": "N",
    "3:2:.12..0": "PD2",
    "3:2:.12..1": "PD1",
    "3:2:.12..2": "N",
    "3:2:.12.0.": "PD1",
    "3:2:.12.00": "Y",
    "3:2:.12.01": "PD1",
    "3:2:.12.02": "Y",
    "3:2:.12.1.": "N",
    "3:2:.12.10": "PD2",
    "3:2:.12.11": "PD1",
    "3:2:.12.12": "Y",
    "3:2:.12.2.": "N",
    "3:2:.12.20": "PD2",
    "3:2:.12.21": "PD1",
    "3:2:.12.22": "Y",
    "3:2:.120..": "N",
    "3:2:.120.0": "O",
    "3:2:.120.1": "Y",
    "3:2:.120.2": "N",
    "3:2:.1200.": "Y",
    "3:2:.12000": "Y",
    "3:2:.12001": "Y",
    "3:2:.12002": "Y",
    "3:2:.1201.": "O",
    "3:2:.12010": "O",
    "3:2:.12011": "Y",
    "3:2:.12012": "Y",
    "3:2:.1202.": "N",
    "3:2:.12020": "O",
    "3:2:.12021": "Y",
    "3:2:.12022": "Y",
    "3:2:.121..": "N",
    "3:2:.121.0": "Y",
    "3:2:.121.1": "Y",
    "3:2:.121.2": "N",
    "3:2:.1210.": "Y",
    "3:2:.12100": "Y",
    "3:2:.12101": "Y",
    "3:2:.12102": "Y",
    "3:2:.1211.": "Y",
    "3:2:.12110": "Y",
    "3:2:.12111": "Y",
    "3:2:.12112": "Y",
    "3:2:.1212.": "N",
    "3:2:.12120": "Y",
    "3:2:.12121": "Y",
    "3:2:.12122": "Y",
    "3:2:.122..": "N",
    "3:2:.122.0": "Y",
    "3:2:.122.1": "Y",
    "3:2:.122.2": "N",
    "3:2:.1220.": "Y",
    "3:2:.12200": "Y",
    "3:2:.12201": "Y",
    "3:2:.12202": "Y",
    "3:2:.1221.": "PD1",
    "3:2:.12210": "Y",
    "3:2:.12211": "Y",
    "3:2:.12212": "Y",
    "3:2:.1222.": "N",
    "3:2:.12220": "Y",
    "3:2:.12221": "Y",
    "3:2:.12222": "Y",
    "3:2:01.2..": "N",
    "3:2:01.2.0": "NR3:12",
    "3:2:01.2.1": "N",
    "3:2:01.2.2": "N",
    "3:2:01.20.": "PD2",
    "3:2:01.200": "Y",
    "3:2:01.201": "O",
    "3:2:01.202": "Y",
    "3:2:01.21.": "PD1",
    "3:2:01.210": "Y",
    "3:2:01.211": "Y",
    "3:2:01.212": "Y",
    "3:2:01.22.": "N",
    "3:2:01.220": "NR3:12",
    "3:2:01.221": "O",
    "3:2:01.222": "Y",
    "3:2:0102..": "PD1",
    "3:2:0102.0": "Y",
    "3:2:0102.1": "Y",
    "3:2:0102.2": "PD1",
    "3:2:01020.": "Y",
    "3:2:01021.": "Y",
    "3:2:01022.": "PD1",
    "3:2:0112..": "N",
    "3:2:0112.0": "NR3:12",
    "3:2:0112.1": "O",
    "3:2:0112.2": "N",
    "3:2:01120.": "NPO|PD2",
    "3:2:01121.": "PD1",
    "3:2:01122.": "N",
    "3:2:012...": "N",
    "3:2:012..0": "NPO|PD2",
    "3:2:012..1": "PD1",
    "3:2:012..2": "N",
    "3:2:012.0.": "PD1",
    "3:2:012.00": "Y",
    "3:2:012.01": "PD1",
    "3:2:012.02": "Y",
    "3:2:012.1.": "N",
    "3:2:012.10": "NPO|PD2",
    "3:2:012.11": "PD1",
    "3:2:012.12": "Y",
    "3:2:012.2.": "N",
    "3:2:012.20": "NPO|PD2",
    "3:2:012.21": "PD1",
    "3:2:012.22": "Y",
    "3:2:0120..": "O",
    "3:2:0120.0": "Y",
    "3:2:0120.1": "Y",
    "3:2:0120.2": "O",
    "3:2:01200.": "Y",
    "3:2:01201.": "Y",
    "3:2:01202.": "O",
    "3:2:0121..": "N",
    "3:2:0121.0": "Y",
    "3:2:0121.1": "Y",
    "3:2:0121.2": "N",
    "3:2:01210.": "Y",
    "3:2:01211.": "Y",
    "3:2:01212.": "N",
    "3:2:0122..": "N",
    "3:2:0122.0": "Y",
    "3:2:0122.1": "Y",
    "3:2:0122.2": "N",
    "3:2:01220.": "Y",
    "3:2:01221.": "PD1",
    "3:2:01222.": "N",
    "3:2:1..2..": "N",
    "3:2:1..2.0": "PD2",
    "3:2:1..2.1": "N",
    "3:2:1..2.2": "N",
    "3:2:1..20.": "PD1",
    "3:2:1..200": "Y",
    "3:2:1..201": "Y",
    "3:2:1..202": "Y",
    "3:2:1..21.": "PD1",
    "3:2:1..210": "Y",
    "3:2:1..211": "Y",
    "3:2:1..212": "Y",
    "3:2:1..22.": "N",
    "3:2:1..220": "NPO|PD2",
    "3:2:1..221": "O",
    "3:2:1..222": "Y",
    "3:2:1.02..": "N",
    "3:2:1.02.0": "PD2",
    "3:2:1.02.1": "O",
    "3:2:1.02.2": "N",
    "3:2:1.020.": "PD1",
    "3:2:1.0200": "Y",
    "3:2:1.0201": "Y",
    "3:2:1.0202": "Y",
    "3:2:1.021.": "PD1",
    "3:2:1.0210": "Y",
    "3:2:1.0211": "Y",
    "3:2:1.0212": "Y",
    "3:2:1.022.": "N",
    "3:2:1.0220": "NPO|PD2",
    "3:2:1.0221": "Y",
    "3:2:1.0222": "Y",
    "3:2:1.12..": "N",
    "3:2:1.12.0": "PD2",
    "3:2:1.12.1": "O",
    "3:2:1.12.2": "N",
    "3:2:1.120.": "PD1",
    "3:2:1.1200": "Y",
    "3:2:1.1201": "Y",
    "3:2:1.1202": "Y",
    "3:2:1.121.": "PD1",
    "3:2:1.1210": "Y",
    "3:2:1.1211": "Y",
    "3:2:1.1212": "Y",
    "3:2:1.122.": "N",
    "3:2:1.1220": "NPO|PD2",
    "3:2:1.1221": "Y",
    "3:2:1.1222": "Y",
    "3:2:1.2...": "N",
    "3:2:1.2..0": "PD1",
    "3:2:1.2..1": "PD1",
    "3:2:1.2..2": "N",
    "3:2:1.2.0.": "N",
    "3:2:1.2.00": "PD1",
    "3:2:1.2.01": "PD1",
    "3:2:1.2.02": "Y",
    "3:2:1.2.1.": "N",
    "3:2:1.2.10": "PD1",
    "3:2:1.2.11": "PD1",
    "3:2:1.2.12": "Y",
    "3:2:1.2.2.": "N",
    "3:2:1.2.20": "PD1",
    "3:2:1.2.21": "PD1",
    "3:2:1.2.22": "Y",
    "3:2:1.20..": "PD1",
    "3:2:1.20.0": "PD1",
    "3:2:1.20.1": "Y",
    "3:2:1.20.2": "PD1",
    "3:2:1.200.": "PD1",
    "3:2:1.2000": "PD1",
    "3:2:1.2001": "Y",
    "3:2:1.2002": "Y",
    "3:2:1.201.": "PD1",
    "3:2:1.2010": "PD1",
    "3:2:1.2011": "Y",
    "3:2:1.2012": "Y",
    "3:2:1.202.": "PD1",
    "3:2:1.2020": "PD1",
    "3:2:1.2021": "Y",
    "3:2:1.2022": "Y",
    "3:2:1.21..": "N",
    "3:2:1.21.0": "Y",
    "3:2:1.21.1": "Y",
    "3:2:1.21.2": "N",
    "3:2:1.210.": "Y",
    "3:2:1.2100": "Y",
    "3:2:1.2101": "Y",
    "3:2:1.2102": "Y",
    "3:2:1.211.": "Y",
    "3:2:1.2110": "Y",
    "3:2:1.2111": "Y",
    "3:2:1.2112": "Y",
    "3:2:1.212.": "N",
    "3:2:1.2120": "Y",
    "3:2:1.2121": "Y",
    "3:2:1.2122": "Y",
    "3:2:1.22..": "N",
    "3:2:1.22.0": "Y",
    "3:2:1.22.1": "Y",
    "3:2:1.22.2": "N",
    "3:2:1.220.": "PD1",
    "3:2:1.2200": "Y",
    "3:2:1.2201": "Y",
    "3:2:1.2202": "Y",
    "3:2:1.221.": "PD1",
    "3:2:1.2210": "Y",
    "3:2:1.2211": "Y",
    "3:2:1.2212": "Y",
    "3:2:1.222.": "N",
    "3:2:1.2220": "Y",
    "3:2:1.2221": "Y",
    "3:2:1.2222": "Y",
    "3:2:10.2..": "N",
    "3:2:10.2.0": "Y",
    "3:2:10.2.1": "N",
    "3:2:10.2.2": "N",
    "3:2:10.20.": "Y",
    "3:2:10.200": "Y",
    "3:2:10.201": "Y",
    "3:2:10.202": "Y",
    "3:2:10.21.": "PD1",
    "3:2:10.210": "Y",
    "3:2:10.211": "Y",
    "3:2:10.212": "Y",
    "3:2:10.22.": "N",
    "3:2:10.220": "Y",
    "3:2:10.221": "O",
    "3:2:10.222": "Y",
    "3:2:1002..": "Y",
    "3:2:1002.0": "Y",
    "3:2:1002.1": "Y",
    "3:2:1002.2": "Y",
    "3:2:10020.": "Y",
    "3:2:10021.": "Y",
    "3:2:10022.": "Y",
    "3:2:1012..": "N",
    "3:2:1012.0": "Y",
    "3:2:1012.1": "O",
    "3:2:1012.2": "N",
    "3:2:10120.": "Y",
    "3:2:10121.": "PD1",
    "3:2:10122.": "N",
    "3:2:102...": "N",
    "3:2:102..0": "Y",
    "3:2:102..1": "PD1",
    "3:2:102..2": "N",
    "3:2:102.0.": "Y",
    "3:2:102.00": "Y",
    "3:2:102.01": "Y",
    "3:2:102.02": "Y",
    "3:2:102.1.": "N",
    "3:2:102.10": "Y",
    "3:2:102.11": "PD1",
    "3:2:102.12": "Y",
    "3:2:102.2.": "N",
    "3:2:102.20": "Y",
    "3:2:102.21": "PD1",
    "3:2:102.22": "Y",
    "3:2:1020..": "Y",
    "3:2:1020.0": "Y",
    "3:2:1020.1": "Y",
    "3:2:1020.2": "Y",
    "3:2:10200.": "Y",
    "3:2:10201.": "Y",
    "3:2:10202.": "Y",
    "3:2:1021..": "N",
    "3:2:1021.0": "Y",
    "3:2:1021.1": "Y",
    "3:2:1021.2": "N",
    "3:2:10210.": "Y",
    "3:2:10211.": "Y",
    "3:2:10212.": "N",
    "3:2:1022..": "N",
    "3:2:1022.0": "Y",
    "3:2:1022.1": "Y",
    "3:2:1022.2": "N",
    "3:2:10220.": "Y",
    "3:2:10221.": "PD1",
    "3:2:10222.": "N",
    "3:2:11.2..": "N",
    "3:2:11.2.0": "Y",
    "3:2:11.2.1": "N",
    "3:2:11.2.2": "N",
    "3:2:11.20.": "Y",
    "3:2:11.200": "Y",
    "3:2:11.201": "Y",
    "3:2:11.202": "Y",
    "3:2:11.21.": "PD1",
    "3:2:11.210": "Y",
    "3:2:11.211": "Y",
    "3:2:11.212": "Y",
    "3:2:11.22.": "N",
    "3:2:11.220": "Y",
    "3:2:11.221": "O",
    "3:2:11.222": "Y",
    "3:2:1102..": "PD1",
    "3:2:1102.0": "Y",
    "3:2:1102.1": "Y",
    "3:2:1102.2": "PD1",
    "3:2:11020.": "Y",
    "3:2:11021.": "Y",
    "3:2:11022.": "PD1",
    "3:2:1112..": "N",
    "3:2:1112.0": "Y",
    "3:2:1112.1": "O",
    "3:2:1112.2": "N",
    "3:2:11120.": "Y",
    "3:2:11121.": "PD1",
    "3:2:11122.": "N",
    "3:2:112...": "N",
    "3:2:112..0": "Y",
    "3:2:112..1": "PD1",
    "3:2:112..2": "N",
    "3:2:112.0.": "PD1",
    "3:2:112.00": "Y",
    "3:2:112.01": "PD1",
    "3:2:112.02": "Y",
    "3:2:112.1.": "N",
    "3:2:112.10": "Y",
    "3:2:112.11": "PD1",
    "3:2:112.12": "Y",
    "3:2:112.2.": "N",
    "3:2:112.20": "Y",
    "3:2:112.21": "PD1",
    "3:2:112.22": "Y",
    "3:2:1120..": "Y",
    "3:2:1120.0": "Y",
    "3:2:1120.1": "Y",
    "3:2:1120.2": "Y",
    "3:2:11200.": "Y",
    "3:2:11201.": "Y",
    "3:2:11202.": "Y",
    "3:2:1121..": "N",
    "3:2:1121.0": "Y",
    "3:2:1121.1": "Y",
    "3:2:1121.2": "N",
    "3:2:11210.": "Y",
    "3:2:11211.": "Y",
    "3:2:11212.": "N",
    "3:2:1122..": "N",
    "3:2:1122.0": "Y",
    "3:2:1122.1": "Y",
    "3:2:1122.2": "N",
    "3:2:11220.": "Y",
    "3:2:11221.": "PD1",
    "3:2:11222.": "N",
    "3:2:12.0..": "PD1",
    "3:2:12.0.0": "Y",
    "3:2:12.0.1": "Y",
    "3:2:12.0.2": "PD1",
    "3:2:12.00.": "Y",
    "3:2:12.000": "Y",
    "3:2:12.001": "Y",
    "3:2:12.002": "Y",
    "3:2:12.01.": "Y",
    "3:2:12.010": "Y",
    "3:2:12.011": "Y",
    "3:2:12.012": "Y",
    "3:2:12.02.": "PD1",
    "3:2:12.020": "Y",
    "3:2:12.021": "Y",
    "3:2:12.022": "Y",
    "3:2:12.2..": "N",
    "3:2:12.2.0": "O",
    "3:2:12.2.1": "N",
    "3:2:12.2.2": "N",
    "3:2:12.20.": "PD1",
    "3:2:12.200": "Y",
    "3:2:12.201": "Y",
    "3:2:12.202": "Y",
    "3:2:12.21.": "PD1",
    "3:2:12.210": "Y",
    "3:2:12.211": "Y",
    "3:2:12.212": "Y",
    "3:2:12.22.": "N",
    "3:2:12.220": "Y",
    "3:2:12.221": "O",
    "3:2:12.222": "Y",
    "3:2:120...": "N",
    "3:2:120..0": "O",
    "3:2:120..1": "PD2",
    "3:2:120..2": "N",
    "3:2:120.0.": "PD1",
    "3:2:120.00": "Y",
    "3:2:120.01": "Y",
    "3:2:120.02": "Y",
    "3:2:120.1.": "PD1",
    "3:2:120.10": "Y",
    "3:2:120.11": "Y",
    "3:2:120.12": "Y",
    "3:2:120.2.": "N",
    "3:2:120.20": "Y",
    "3:2:120.21": "NPO|PD2",
    "3:2:120.22": "Y",
    "3:2:1200..": "PD1",
    "3:2:1200.0": "Y",
    "3:2:1200.1": "Y",
    "3:2:1200.2": "PD1",
    "3:2:12000.": "Y",
    "3:2:12001.": "Y",
    "3:2:12002.": "PD1",
    "3:2:1201..": "Y",
    "3:2:1201.0": "Y",
    "3:2:1201.1": "Y",
    "3:2:1201.2": "Y",
    "3:2:12010.": "Y",
    "3:2:12011.": "Y",
    "3:2:12012.": "Y",
    "3:2:1202..": "N",
    "3:2:1202.0": "O",
    "3:2:1202.1": "O",
    "3:2:1202.2": "N",
    "3:2:12020.": "PD1",
    "3:2:12021.": "PD1",
    "3:2:12022.": "N",
    "3:2:1210..": "PD1",
    "3:2:1210.0": "Y",
    "3:2:1210.1": "Y",
    "3:2:1210.2": "PD1",
    "3:2:12100.": "Y",
    "3:2:12101.": "Y",
    "3:2:12102.": "PD1",
    "3:2:1212..": "N",
    "3:2:1212.0": "O",
    "3:2:1212.1": "O",
    "3:2:1212.2": "N",
    "3:2:12120.": "PD1",
    "3:2:12121.": "PD1",
    "3:2:12122.": "N",
    "3:2:122...": "N",
    "3:2:122..0": "Y",
    "3:2:122..1": "PD1",
    "3:2:122..2": "N",
    "3:2:122.0.": "PD1",
    "3:2:122.00": "Y",
    "3:2:122.01": "Y",
    "3:2:122.02": "Y",
    "3:2:122.1.": "N",
    "3:2:122.10": "Y",
    "3:2:122.11": "PD1",
    "3:2:122.12": "Y",
    "3:2:122.2.": "N",
    "3:2:122.20": "Y",
    "3:2:122.21": "PD1",
    "3:2:122.22": "Y",
    "3:2:1220..": "PD1",
    "3:2:1220.0": "Y",
    "3:2:1220.1": "Y",
    "3:2:1220.2": "PD1",
    "3:2:12200.": "Y",
    "3:2:12201.": "Y",
    "3:2:12202.": "PD1",
    "3:2:1221..": "N",
    "3:2:1221.0": "Y",
    "3:2:1221.1": "Y",
    "3:2:1221.2": "N",
    "3:2:12210.": "Y",
    "3:2:12211.": "Y",
    "3:2:12212.": "N",
    "3:2:1222..": "N",
    "3:2:1222.0": "Y",
    "3:2:1222.1": "Y",
    "3:2:1222.2": "N",
    "3:2:12220.": "PD1",
    "3:2:12221.": "PD1",
    "3:2:12222.": "N",
}

