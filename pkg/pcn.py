#!/usr/local/bin/python
from pcn_bench_cli.pcn_cli_group.pcn import pcn

if __name__ == '__main__':
    pcn()
