from .app import ServiceState, build_state, create_app

__all__ = ["ServiceState", "build_state", "create_app"]
