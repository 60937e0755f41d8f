#pragma once

#include <compare>
#include <cstdio>
#include <string>

namespace dnvol {

// Calendar date, no time zone. One bar per trading day.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    bool valid() const {
        if (month < 1 || month > 12 || day < 1) return false;
        static constexpr int mdays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
        int dmax = mdays[month - 1];
        if (month == 2 && leap_year()) dmax = 29;
        return day <= dmax;
    }

    bool leap_year() const {
        return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    }

    // Days since 1970-01-01 (proleptic Gregorian, Howard Hinnant's civil algorithm).
    long days_from_epoch() const {
        long y = year - (month <= 2);
        long era = (y >= 0 ? y : y - 399) / 400;
        unsigned yoe = static_cast<unsigned>(y - era * 400);
        unsigned doy = (153u * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
        unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
        return era * 146097 + static_cast<long>(doe) - 719468;
    }

    // 0 = Monday ... 6 = Sunday.
    int weekday() const {
        long d = days_from_epoch();
        return static_cast<int>(((d % 7) + 10) % 7);
    }

    Date next_day() const {
        Date d{year, month, day + 1};
        if (!d.valid()) {
            d.day = 1;
            if (++d.month > 12) {
                d.month = 1;
                ++d.year;
            }
        }
        return d;
    }

    Date next_weekday() const {
        Date d = next_day();
        while (d.weekday() >= 5) d = d.next_day();
        return d;
    }

    std::string iso() const {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
        return buf;
    }
};

}  // namespace dnvol
