import java.util.Arrays;
import java.util.Scanner;

public class Exercise141 {
    static class Point {
        int x;
        int y;
        Point(int x, int y) {
            this.x = x;
            this.y = y;
        }
        double distance() {
            return Math.sqrt(x * x + y * y);
        }
    }

    public static int absolute(int num) {
        return num < 0 ? -num : num;
    }

    public static boolean palindrome(String input) {
        int left = 0;
        int right = input.length() - 1;
        while (left < right) {
            if (input.charAt(left) != input.charAt(right)) {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    public static double average(int[] arr) {
        double total = 0;
        for (int v : arr) {
            total = total + v;
        }
        return total / arr.length;
    }

    public static int search(int[] arr, int target) {
        for (int j = 0; j < arr.length; j++) {
            if (arr[j] == target) {
                return j;
            }
        }
        return -1;
    }

    static char grade(int mark) {
        if (mark >= 90) {
            return 'A';
        } else if (mark >= 80) {
            return 'B';
        } else if (mark >= 70) {
            return 'C';
        } else {
            return 'F';
        }
    }

    public static int parseOrZero(String input) {
        try {
            return Integer.parseInt(input.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static long fact(int num) {
        if (num <= 1) {
            return 1;
        }
        return num * fact(num - 1);
    }

    static void sortArray(int[] arr) {
        for (int j = 0; j < arr.length - 1; j++) {
            for (int m = 0; m < arr.length - 1 - j; m++) {
                if (arr[m] > arr[m + 1]) {
                    int tmp = arr[m];
                    arr[m] = arr[m + 1];
                    arr[m + 1] = tmp;
                }
            }
        }
    }

    static void launch(int left) {
        do {
            System.out.println(left);
            left--;
            } while (left > 0);
            System.out.println("Go!");
        }

    static int maxValue(int[] arr) {
        int best = arr[0];
        for (int j = 1; j < arr.length; j++) {
            if (arr[j] > best) {
                best = arr[j];
            }
        }
        return best;
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {1, 8, 9, 5, 8, 5};
        Point p = new Point(2, 4);
        System.out.println(p.distance());
        System.out.println(absolute(29));
        System.out.println(palindrome("noon"));
        double avg = average(numbers);
        System.out.println("Average: " + avg);
        int pos = search(numbers, 6);
        System.out.println("Found at " + pos);
        System.out.println("Grade: " + grade(96));
        int parsed = parseOrZero("42");
        System.out.println(parsed);
        System.out.println(fact(12));
        sortArray(numbers);
        System.out.println(Arrays.toString(numbers));
        launch(4);
        int top = maxValue(numbers);
        System.out.println("Max is " + top);
        sc.close();
    }
}
