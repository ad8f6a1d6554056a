"""triconn package."""
