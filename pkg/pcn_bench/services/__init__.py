from pcn_bench.services.service_provider import ServiceProvider

SERVICE_PROVIDER = SP = ServiceProvider()
